#include "semifrac/cli.hpp"

int main(int argc, char** argv) { return semifrac::run_cli(argc, argv); }
