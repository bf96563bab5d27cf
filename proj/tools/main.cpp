#include <iostream>

#include "table.hpp"

int main(int argc, char** argv) {
  return gmlife::table::run(argc, argv, std::cout, std::cerr);
}
