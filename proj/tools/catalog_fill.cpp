// Recompute the fingerprint fields of a catalog file and print the result.
#include <iostream>

#include "cfl/groups/catalog.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: catalog_fill FILE\n";
    return 2;
  }
  try {
    auto cat = cfl::Catalog::load(argv[1]);
    std::cout << cat.serialize();
    for (const auto& e : cat.entries()) std::cerr << e.label << ": " << e.refined.to_string() << "\n";
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
