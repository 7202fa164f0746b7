#include <iostream>
#include <variant>

#include "commands.hpp"

int main(int argc, char** argv) {
  auto parsed = hankel_lab::cli::parse_command_line(argc, argv, std::cout, std::cerr);
  if (const int* code = std::get_if<int>(&parsed)) {
    return *code;
  }
  return hankel_lab::cli::run(std::get<hankel_lab::cli::RunConfig>(parsed), std::cout, std::cerr);
}
