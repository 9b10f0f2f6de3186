#include "fcy/frobenius.hpp"

#include <cstdlib>

namespace fcy {

Character Character::of_base(const Rat& b) {
    if (b == 0) throw ParseError("character base must be nonzero");
    Character c;
    c.base = b;
    if (b == 1)
        c.canonical = "tr";
    else if (b == -1)
        c.canonical = "sgn";
    else
        c.canonical = rat_to_string(b);
    return c;
}

Character Character::parse(const std::string& text, long long d) {
    if (text == "tr") return trivial();
    if (text == "sgn") return sign();
    if (text == "sgn^d") return sign_power(d);
    if (text.rfind("sgn^", 0) == 0) {
        const std::string tail = text.substr(4);
        if (tail.empty() || tail.find_first_not_of("-0123456789") != std::string::npos)
            throw ParseError("bad character exponent: " + text);
        return sign_power(std::atoll(tail.c_str()));
    }
    return of_base(rat_from_string(text));
}

Rat Character::value(long long n) const {
    Rat out = 1;
    Rat b = n >= 0 ? base : Rat(1) / base;
    long long e = n >= 0 ? n : -n;
    for (long long i = 0; i < e; ++i) out *= b;
    return out;
}

template SocleAnalysis<Rat> socle_analysis(const FiniteDimAlgebra<Rat>&);
template SocleAnalysis<Fp> socle_analysis(const FiniteDimAlgebra<Fp>&);

template std::vector<Rat> frobenius_form(const FiniteDimAlgebra<Rat>&,
                                         const SocleAnalysis<Rat>&, std::uint64_t);
template std::vector<Fp> frobenius_form(const FiniteDimAlgebra<Fp>&,
                                        const SocleAnalysis<Fp>&, std::uint64_t);

template Nakayama<Rat> nakayama_automorphism(const FiniteDimAlgebra<Rat>&,
                                             const SocleAnalysis<Rat>&,
                                             const std::vector<Rat>&);
template Nakayama<Fp> nakayama_automorphism(const FiniteDimAlgebra<Fp>&,
                                            const SocleAnalysis<Fp>&,
                                            const std::vector<Fp>&);

template Matrix<Rat> chi_twist(const FiniteDimAlgebra<Rat>&, const Matrix<Rat>&,
                               const Character&);
template Matrix<Fp> chi_twist(const FiniteDimAlgebra<Fp>&, const Matrix<Fp>&,
                              const Character&);

template std::optional<std::vector<Rat>> inner_witness(const FiniteDimAlgebra<Rat>&,
                                                       const Matrix<Rat>&, bool,
                                                       std::uint64_t);
template std::optional<std::vector<Fp>> inner_witness(const FiniteDimAlgebra<Fp>&,
                                                      const Matrix<Fp>&, bool,
                                                      std::uint64_t);

template OrderScan da_order(const FiniteDimAlgebra<Rat>&, const Nakayama<Rat>&,
                            const Character&, int, bool, std::uint64_t);
template OrderScan da_order(const FiniteDimAlgebra<Fp>&, const Nakayama<Fp>&,
                            const Character&, int, bool, std::uint64_t);

template CYReport analyze_presentation<Rat>(const Presentation&,
                                            const AnalyzeOptions&);
template CYReport analyze_presentation<Fp>(const Presentation&,
                                           const AnalyzeOptions&);

}  // namespace fcy
