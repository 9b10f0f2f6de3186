#include "fcy/category.hpp"

namespace fcy {

template struct GradedCategory<Rat>;
template struct GradedCategory<Fp>;
template struct EquivariantWindow<Rat>;
template struct EquivariantWindow<Fp>;
template struct SerreData<Rat>;
template struct SerreData<Fp>;

template GradedCategory<Rat> base_category(const FiniteDimAlgebra<Rat>&);
template GradedCategory<Fp> base_category(const FiniteDimAlgebra<Fp>&);

template EquivariantWindow<Rat> smash_window(const GradedCategory<Rat>&, long long,
                                             long long);
template EquivariantWindow<Fp> smash_window(const GradedCategory<Fp>&, long long,
                                            long long);

template GradedCategory<Rat> orbit_of_window(const EquivariantWindow<Rat>&);
template GradedCategory<Fp> orbit_of_window(const EquivariantWindow<Fp>&);

template RoundtripReport roundtrip_check(const FiniteDimAlgebra<Rat>&, long long,
                                         long long);
template RoundtripReport roundtrip_check(const FiniteDimAlgebra<Fp>&, long long,
                                         long long);

template SerreData<Rat> serre_structure(const FiniteDimAlgebra<Rat>&,
                                        const SocleAnalysis<Rat>&,
                                        const std::vector<Rat>&, const Nakayama<Rat>&,
                                        const Character&);
template SerreData<Fp> serre_structure(const FiniteDimAlgebra<Fp>&,
                                       const SocleAnalysis<Fp>&,
                                       const std::vector<Fp>&, const Nakayama<Fp>&,
                                       const Character&);

template SerreCheckReport verify_serre(const FiniteDimAlgebra<Rat>&,
                                       const SerreData<Rat>&, const Character&);
template SerreCheckReport verify_serre(const FiniteDimAlgebra<Fp>&,
                                       const SerreData<Fp>&, const Character&);

}  // namespace fcy
