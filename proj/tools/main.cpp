#include <string_view>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string_view> args(argv, argv + argc);
  return fcs::cli::run(args);
}
