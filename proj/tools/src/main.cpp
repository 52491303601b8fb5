#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qskein_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> format;
  if (const char* env = std::getenv("QSKEIN_FORMAT"); env != nullptr && *env != '\0') format = env;
  return qskein::cli::run(args, std::cout, std::cerr, format);
}
