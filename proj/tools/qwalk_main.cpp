#include "qwalk/cli.hpp"

int main(int argc, char** argv) {
    return qwalk::cli::run_cli(argc, argv);
}
