#include "tgs/cli.hpp"

int main(int argc, char** argv) {
    return tgs::cli_main(argc, argv);
}
