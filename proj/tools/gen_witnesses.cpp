// Regenerates data/witnesses.json.
#include <bvd/engeler.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: gen_witnesses <out.json>\n";
        return 2;
    }
    auto t0 = std::chrono::steady_clock::now();
    try {
        auto w = bvd::compute_witnesses(1);
        std::ofstream out(argv[1]);
        out << bvd::witnesses_to_json(w) << "\n";
        if (!out) {
            std::cerr << "cannot write " << argv[1] << "\n";
            return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "done in " << dt << " s\n";
}
