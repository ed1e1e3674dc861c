#include "flateta/cli.hpp"

int main(int argc, char** argv) { return flateta::run(argc, argv); }
