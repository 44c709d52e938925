#pragma once

#include <array>
#include <vector>

#include "dtv/fock.hpp"
#include "dtv/partition.hpp"
#include "dtv/pyramid.hpp"
#include "dtv/qseries.hpp"

namespace dtv {

struct Legs {
    Partition lambda, mu, nu;
};

struct ColorMap {
    Group group = Group::z2z2;
    int n = 4;
    int nvars() const { return group == Group::z2z2 ? 4 : n; }
    int operator()(int i, int j, int k) const;
};

// Colored 3D partitions with one leg (the other two must be empty).  Leg
// boxes weigh nothing, every other box weighs its color variable.
Series enumerate_3d(const Legs& legs, const ColorMap& cm, int cutoff);
Series enumerate_3d(const Partition& nu, const ColorMap& cm, int cutoff);

// s_{mu/eta} at a finite list of monomial variables (sign-0 entries are
// skipped).  Variables of negative degree are allowed; the result is then a
// Laurent polynomial, exact in every degree <= cutoff.  A degree-0 variable
// other than 1 throws.  Zero when eta is not inside mu.
Series skew_schur_specialized(const Partition& mu, const Partition& eta, const std::vector<Term>& vars, int nvars,
                              int cutoff);

// bold q_t in the Zn variables
Term bold_q(long t, int n);
// bold q_{i - nu_i} for i = 0..count-1
std::vector<Term> shifted_sequence(const Partition& nu, int n, int count);

Series zn_empty_vertex(int n, int cutoff);
Series hook_factor(const Partition& nu, int n, int cutoff);
Series overall_factor(const Partition& nu, int n, int cutoff);
Series vertex_closed_zn(int n, const Legs& legs, int cutoff);

// Z4 one-leg staircase vertex in the q~ slots.
Series one_leg_zn_staircase(int m, int cutoff);

// old variable i becomes new variable image[i]
Series rename(const Series& s, const std::vector<int>& image);
// V^{Z4}(x0,x1,x2,x3) with x_i the Z2xZ2 slot args[i]
Series z4_as_z2z2(const Series& z4, const std::array<int, 4>& args);

Series closed_z2z2_nolegs(int cutoff);
Series z_pyramid_closed(int cutoff);

struct Triple {
    int a = CA, b = CB, c = CC;
};
Series phi(const Triple& v, int m, int cutoff);
Series upsilon(const Triple& v, int m, int cutoff);
Series one_leg_z2z2_closed(int m, int cutoff);
Series corollary_rpc_closed(int m, int cutoff);

// V_{00nu}(q0,qa,qb,qc) against V_{nu00}(q0,qc,qa,qb) and V_{0nu0}(q0,qb,qc,qa)
bool symmetry_check(const Partition& nu, int cutoff);

}  // namespace dtv
