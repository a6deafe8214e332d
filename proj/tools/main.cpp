#include "cli_app.hpp"

int main(int argc, char** argv) {
    return poolstat::run_cli(argc, argv);
}
