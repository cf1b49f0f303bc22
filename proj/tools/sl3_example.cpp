// Change of variables on the SL(3) big cell, word (1,2,1), at zeta = (1, 1, 1).

#include <iostream>

#include "flagres/flagres.hpp"

int main() {
    using namespace flagres;
    const ChartPoint zeta{Word(3, {1, 2, 1}), {1.0, 1.0, 1.0}};

    const ChartPoint z = zeta_to_z(zeta);
    const ChartPoint closed = closed_form_sl3(zeta);
    for (std::size_t j = 0; j < z.coords.size(); ++j)
        std::cout << "z" << j + 1 << " = " << z.coords[j] << "   closed form " << closed.coords[j] << "\n";

    const ChartPoint back = z_to_zeta(z);
    std::cout << "recovered zeta:";
    for (const auto& c : back.coords) std::cout << " " << c;
    const Matrix m = big_product_M(zeta);
    std::cout << "\n\nM(zeta) =\n";
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) std::cout << "  " << m(r, c);
        std::cout << "\n";
    }
}
