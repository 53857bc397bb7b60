#include <iostream>

#include "hesslie/cli.hpp"

int main(int argc, char** argv) {
  return hesslie::run_command({argv + 1, argv + argc}, std::cout, std::cerr);
}
