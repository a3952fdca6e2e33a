#include "orbitkit/lie_algebra.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"orbitkit: coadjoint-orbit geometry and representation checks"};
  app.require_subcommand(1);
  CLI11_PARSE(app, argc, argv);
  std::cerr << "no subcommands wired up yet\n";
  return 2;
}
