#include <cstdio>
#include <iostream>

#include "secants/io.hpp"

// Writes the compiled-in reference tables as JSON to argv[1] (or stdout),
// used to regenerate data/constants.json when the tables change.
int main(int argc, char** argv) {
  try {
    const std::string text = secants::constants_to_json();
    if (argc > 1)
      secants::write_text_file(argv[1], text);
    else
      std::cout << text;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "dump_constants: %s\n", e.what());
    return 1;
  }
  return 0;
}
