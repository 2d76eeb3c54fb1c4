// Quintic threefold: virtual B-model series, mirror map and the first instanton numbers.
#include <iostream>

#include "qk/mirror.hpp"

int main(int argc, char **argv)
{
    const int D = argc > 1 ? std::stoi(argv[1]) : 4;
    const qk::CYSeriesFamily f = qk::cy_family(5, D);
    std::cout << "L~_1(q) = " << f[1] << '\n';
    const qk::QSeries L2 = qk::mirror_transform(5, D).at(2);
    std::cout << "L_2(e^t) = " << L2 << '\n';
    for (int d = 1; d <= D; ++d) {
        std::cout << "5 L_2^{5,5," << d << "} = " << qk::Rat(5) * L2[d] << '\n';
    }
}
