#pragma once

// Carrier families used across the tests, symbolic where the family allows.

#include <ostream>
#include <vector>

#include "ramond/modules.hpp"

namespace ramond {

inline void PrintTo(const Vector& v, std::ostream* os) { *os << to_string(v); }
inline void PrintTo(const SymScalar& s, std::ostream* os) { *os << s.to_string(); }
inline void PrintTo(const AlgebraElement& x, std::ostream* os) { *os << to_string(x); }

} // namespace ramond

namespace ramond::testing {

struct Sample {
    const char* name;
    FamilyPtr family;
    WindowSpec window;
};

inline RingPtr ring() { return ParamRing::standard({"b", "alpha", "lambda", "f0", "f1", "fm1"}); }

inline SymScalar p(const char* name) { return SymScalar::param(ring(), name); }

inline std::vector<Sample> symbolic_samples(const RingPtr& r)
{
    WindowSpec w;
    w.t_bound = 2;
    WindowSpec wo = w;
    wo.aux_bound = 3;
    WindowSpec w2 = w;
    w2.aux_bound = 1;
    WindowSpec wn = w;
    wn.aux_bound = 2;
    WindowSpec wf = w;
    wf.pole_bound = 2;
    return {
        {"laurent-const", FamilySpec::laurent(parse_laurent("alpha", r), r), w},
        {"laurent-poly", FamilySpec::laurent(parse_laurent("alpha + t - 2*t^-1", r), r), w},
        {"omega", FamilySpec::omega(SymScalar::param(r, "lambda"), r), wo},
        {"degree-two", FamilySpec::degree_two(parse_laurent("f0 + f1*t + fm1*t^-1", r), r), w2},
        {"degree-n1", FamilySpec::degree_n(1, r), w},
        {"degree-n3", FamilySpec::degree_n(3, r), wn},
        {"fraction", FamilySpec::fraction({0, 1, rat(-1, 2)}, {rat(1, 2), rat(1, 3), 2}, r), wf},
    };
}

} // namespace ramond::testing
