#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::optional<std::string> env_cap;
  if (const char* value = std::getenv("BICYCLE_ORACLE_CAP")) env_cap = value;
  const std::vector<std::string> args(argv + 1, argv + argc);
  return bicycle::cli::run(args, std::cin, std::cout, std::cerr, env_cap);
}
