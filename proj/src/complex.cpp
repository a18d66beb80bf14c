#include "toricoh/complex.hpp"

#include "toricoh/errors.hpp"

namespace toricoh {

void RationalComplex::validate() const {
    if (dims.empty()) {
        if (!maps.empty()) throw NotAComplex("maps without terms");
        return;
    }
    if (maps.size() + 1 != dims.size()) throw NotAComplex("term/map count mismatch");
    for (std::size_t i = 0; i < maps.size(); ++i) {
        if (maps[i].cols() != dims[i] || maps[i].rows() != dims[i + 1])
            throw NotAComplex("differential shape mismatch");
    }
    for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
        if (!(maps[i + 1] * maps[i]).is_zero())
            throw NotAComplex("d∘d != 0 at position " + std::to_string(i));
    }
}

std::vector<int> RationalComplex::homology() const {
    validate();
    std::vector<int> h(dims.size(), 0);
    std::vector<int> rk(maps.size(), 0);
    for (std::size_t i = 0; i < maps.size(); ++i) rk[i] = rank(maps[i]);
    for (std::size_t i = 0; i < dims.size(); ++i) {
        int out = i < maps.size() ? rk[i] : 0;
        int in = i > 0 ? rk[i - 1] : 0;
        h[i] = dims[i] - out - in;
    }
    return h;
}

long long RationalComplex::euler() const {
    long long chi = 0;
    int sign = 1;
    for (int d : dims) {
        chi += sign * (long long)d;
        sign = -sign;
    }
    return chi;
}

} // namespace toricoh
