// Regenerates the shipped example spec files from the built-in constructions,
// so that the files and the builders can never drift apart.
#include <iostream>
#include <string>

#include "skewtor/examples.hpp"
#include "skewtor/specfile.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_specs <output-dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  try {
    skewtor::write_spec(skewtor::build_example_4d(), dir + "/norden4d.spec");
    skewtor::write_spec(skewtor::build_example_5d(), dir + "/contact5d.spec");
    skewtor::write_spec(skewtor::build_flat_hyper(2), dir + "/flat8d.spec");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << "wrote norden4d.spec, contact5d.spec, flat8d.spec to " << dir << "\n";
  return 0;
}
