#include <iostream>
#include <string>
#include <vector>

#include "revsynth/cli.hpp"

int main( int argc, char** argv )
{
  std::vector<std::string> const args( argv + 1, argv + argc );
  return revsynth::run_cli( args, std::cout, std::cerr );
}
