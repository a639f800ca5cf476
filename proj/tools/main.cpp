#include "p2galois/cli.hpp"

int main(int argc, char** argv) { return p2g::run(argc, argv); }
