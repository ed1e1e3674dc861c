// Loader for the frozen oracle tables in tests/data.
#ifndef FLATETA_TEST_DATA_HPP_
#define FLATETA_TEST_DATA_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "flateta/matrices.hpp"

namespace testdata {

inline std::string path(const std::string& name) { return std::string(FLATETA_TEST_DATA_DIR) + "/" + name; }

// "i:C:J,i:C:J,..." for i = r-1 .. 1.
inline flateta::BlockSpec parse_counts(int r, const std::string& text) {
  flateta::BlockSpec b;
  b.r = r;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    flateta::BlockCount c;
    char colon;
    std::stringstream is(item);
    is >> c.i >> colon >> c.C >> colon >> c.J;
    b.counts.push_back(c);
  }
  return b;
}

inline std::vector<std::vector<std::string>> rows(const std::string& name) {
  std::ifstream in(path(name));
  std::vector<std::vector<std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::vector<std::string> f;
    std::string w;
    while (ss >> w)
      f.push_back(w);
    if (!f.empty())
      out.push_back(f);
  }
  return out;
}

}  // namespace testdata

#endif
