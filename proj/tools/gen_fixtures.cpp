// Regenerates the shipped example inputs. Usage: gen_fixtures <directory>
#include "lchain/json_io.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_fixtures <directory>\n";
        return 2;
    }
    const std::string dir = argv[1];
    for (const auto& [name, doc] : lchain::fixture_library()) {
        const std::string path = dir + "/" + name + ".json";
        std::ofstream out(path);
        if (!out) {
            std::cerr << "cannot write " << path << "\n";
            return 2;
        }
        out << doc.dump(2) << "\n";
        std::cout << path << "\n";
    }
    return 0;
}
