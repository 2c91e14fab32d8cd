#include "cli.hpp"

int main(int argc, char** argv) {
  return fc::cli::run(argc, argv);
}
