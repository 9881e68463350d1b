#include "cobord/cli.hpp"

int main(int argc, char** argv) { return cobord::run(argc, argv); }
