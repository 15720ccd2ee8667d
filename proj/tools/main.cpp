#include "arithdt/cli.hpp"

int main(int argc, char** argv) { return arithdt::dispatch(argc, argv); }
