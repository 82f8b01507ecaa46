// Prints the three Alexander polynomials of every table knot side by side.
#include <iomanip>
#include <iostream>

#include "knotadj.hpp"

using namespace knotadj;

int main(int argc, char** argv) {
    const std::string path = argc > 1 ? argv[1] : SAMPLE_TABLE;
    int bad = 0;
    for (const auto& e : load_table(path)) {
        const BraidWord b = e.braid();
        const LaurentPoly s = alexander(seifert_from_braid(b).v);
        const LaurentPoly u = alexander_via_burau(b);
        const LaurentPoly r = alexander_from_pd(braid_to_pd(b));
        const bool agree = s == u && u == r;
        bad += !agree;
        std::cout << std::left << std::setw(6) << e.name << (agree ? "  ok  " : "  !!  ") << to_string(s);
        if (!agree) std::cout << " | " << to_string(u) << " | " << to_string(r);
        std::cout << "\n";
    }
    return bad == 0 ? 0 : 1;
}
