#include <doctest.h>

#include <stdexcept>

#include "dtv/fock.hpp"
#include "dtv/rpc.hpp"
#include "dtv/vertex.hpp"

using namespace dtv;

namespace {

constexpr int NV = 4;

// ops act on kets, rightmost first
TransferState act(const std::vector<Operator>& ops, TransferState s) {
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) s = apply(*it, s);
    s.drop_zeros();
    return s;
}

TransferState times(const Series& f, const TransferState& s) {
    TransferState r(s.nvars, s.cutoff);
    for (auto& [p, ser] : s.amp) r.add(p, ser * f);
    return r;
}

Series geometric(const Term& x, int D) {
    Series f = Series::one(NV, D);
    f -= Series::from_term(NV, D, x);
    return f.inverse();
}

Series one_minus(const Term& x, int D) {
    Series f = Series::one(NV, D);
    f -= Series::from_term(NV, D, x);
    return f;
}

// both operator words agree on every basis vector of size <= max_size
void same_operator(const std::vector<Operator>& lhs, const Series& scalar, const std::vector<Operator>& rhs, int D,
                   int max_size = 4) {
    for (auto& lam : partitions_up_to(max_size)) {
        auto s = TransferState::basis(NV, D, lam);
        CHECK(act(lhs, s) == times(scalar, act(rhs, s)));
    }
}

Operator G(int tau, const Term& x) { return Operator::gamma(tau, false, x); }
Operator Gp(int tau, const Term& x) { return Operator::gamma(tau, true, x); }

const Term qa = Term::var(CA), qb = Term::var(CB), qc = Term::var(CC), q0 = Term::var(C0);

}  // namespace

TEST_CASE("gamma on the vacuum") {
    auto s = TransferState::basis(NV, 6, Partition{});
    CHECK(apply(G(+1, qa), s) == s);
    CHECK(apply(Operator::e_plus(qa), s) == s);
}

TEST_CASE("one-row sum") {
    const int D = 6;
    Series v = evaluate_product({G(+1, qa), G(-1, qb)}, NV, D);
    CHECK(v == geometric(qa * qb, D));
    CHECK(evaluate_product({}, NV, D) == Series::one(NV, D));
}

TEST_CASE("border strips") {
    auto one = border_strips(Partition{}, 1, true);
    CHECK(one == std::vector<std::pair<Partition, int>>{{Partition{1}, 1}});
    auto two = border_strips(Partition{}, 2, true);
    std::map<Partition, int> m(two.begin(), two.end());
    CHECK(m == std::map<Partition, int>{{Partition{2}, 1}, {Partition{1, 1}, -1}});
    // removal is the adjoint of addition
    auto all = partitions_up_to(5);
    for (int n = 1; n <= 4; ++n)
        for (auto& lam : all) {
            std::map<Partition, int> add;
            for (auto& [mu, s] : border_strips(lam, n, true)) add[mu] += s;
            for (auto& mu : all) {
                int rem = 0;
                for (auto& [nu, s] : border_strips(mu, n, false))
                    if (nu == lam) rem += s;
                CHECK(add[mu] == rem);
            }
        }
}

TEST_CASE("commutation relations") {
    const int D = 6;
    Term x = qa, y = qb * qc;
    same_operator({G(+1, x), G(-1, y)}, geometric(x * y, D), {G(-1, y), G(+1, x)}, D);
    same_operator({Gp(+1, x), Gp(-1, y)}, geometric(x * y, D), {Gp(-1, y), Gp(+1, x)}, D);
    Series plus = Series::one(NV, D) + Series::from_term(NV, D, x * y);
    same_operator({G(+1, x), Gp(-1, y)}, plus, {Gp(-1, y), G(+1, x)}, D);
    same_operator({Gp(+1, x), G(-1, y)}, plus, {G(-1, y), Gp(+1, x)}, D);
}

TEST_CASE("gamma factors through E") {
    const int D = 5;
    Series one = Series::one(NV, D);
    for (Term x : {qa, qb * qc}) {
        same_operator({G(+1, x)}, one, {Gp(+1, x), Operator::e_plus(x)}, D, 5);
        same_operator({G(-1, x)}, one, {Gp(-1, x), Operator::e_minus(x)}, D, 5);
    }
}

TEST_CASE("E exchange relations") {
    const int D = 6;
    Series one = Series::one(NV, D);
    Term x = qa, y = qb;
    Series g2 = geometric((x * y).pow(2), D);
    same_operator({Operator::e_plus(x), G(+1, y)}, one, {G(+1, y), Operator::e_plus(x)}, D);
    same_operator({Operator::e_minus(x), G(-1, y)}, one, {G(-1, y), Operator::e_minus(x)}, D);
    same_operator({Operator::e_plus(x), Gp(+1, y)}, one, {Gp(+1, y), Operator::e_plus(x)}, D);
    same_operator({Operator::e_minus(x), Gp(-1, y)}, one, {Gp(-1, y), Operator::e_minus(x)}, D);
    same_operator({Operator::e_plus(x), G(-1, y)}, g2, {G(-1, y), Operator::e_plus(x)}, D);
    same_operator({G(+1, x), Operator::e_minus(y)}, g2, {Operator::e_minus(y), G(+1, x)}, D);
    same_operator({Gp(+1, x), Operator::e_minus(y)}, one_minus((x * y).pow(2), D), {Operator::e_minus(y), Gp(+1, x)},
                  D);
}

TEST_CASE("E passes checkerboard weights") {
    const int D = 6;
    Series one = Series::one(NV, D);
    Term x = qa;
    for (auto [g, h] : {std::pair{C0, CC}, std::pair{CA, CB}, std::pair{CB, CA}, std::pair{CC, C0}}) {
        Term gh = Term::var(g) * Term::var(h);
        auto Q = Operator::weight_pair(g, h);
        same_operator({Operator::e_minus_sq(x * x * gh), Q}, one, {Q, Operator::e_minus(x)}, D);
        same_operator({Q, Operator::e_plus_sq(x * x * gh)}, one, {Operator::e_plus(x), Q}, D);
    }
}

TEST_CASE("E passes Zn weights") {
    const int D = 6;
    Series one = Series::one(NV, D);
    Term x = Term::var(1);
    for (int g = 0; g < 4; ++g) {
        Term qg = Term::var(g);
        auto Q = Operator::weight_zn(g);
        same_operator({Operator::e_minus(x * qg), Q}, one, {Q, Operator::e_minus(x)}, D);
        same_operator({Q, Operator::e_plus(x * qg)}, one, {Operator::e_plus(x), Q}, D);
    }
}

TEST_CASE("E on the vacuum") {
    const int D = 6;
    // bra side: <0| E_-(x) = <0|, i.e. the vacuum component of E_-(x)|lam> is zero unless lam = 0
    for (auto& lam : partitions_up_to(4)) {
        auto s = act({Operator::e_minus(qa)}, TransferState::basis(NV, D, lam));
        auto it = s.amp.find(Partition{});
        if (lam.empty()) {
            REQUIRE(it != s.amp.end());
            CHECK(it->second == Series::one(NV, D));
        } else {
            CHECK(it == s.amp.end());
        }
    }
    CHECK(act({Operator::e_plus(qa)}, TransferState::basis(NV, D, Partition{})) ==
          TransferState::basis(NV, D, Partition{}));
}

TEST_CASE("checkerboard weight") {
    auto s = apply(Operator::weight_pair(C0, CC), TransferState::basis(NV, 6, Partition{2, 1}));
    // cells (0,0) even, (1,0) and (0,1) odd
    CHECK(s.amp.at(Partition{2, 1}) == Series::monomial(NV, 6, mono_mul(unit_mono(C0), unit_mono(CC, 2))));
}

TEST_CASE("vertices from operator products") {
    const int D = 6;
    CHECK(vertex_by_transfer({Group::z2z2, 4, {}, TransferMode::standard, D}) == closed_z2z2_nolegs(D));
    CHECK(vertex_by_transfer({Group::zn, 4, {}, TransferMode::standard, D}) == zn_empty_vertex(4, D));
    CHECK(vertex_by_transfer({Group::z2z2, 4, Partition{2, 1}, TransferMode::rpc_antidiag, D}) ==
          rpc_generating_function(Partition{2, 1}, 0, Frame::antidiagonal, D));
    CHECK(vertex_by_transfer({Group::z2z2, 4, Partition{2}, TransferMode::rpc_diag, D}) ==
          rpc_generating_function(Partition{2}, 0, Frame::diagonal, D));
    for (auto nu : {Partition{}, Partition{1}, Partition{3, 1}}) {
        auto v = vertex_by_transfer({Group::z2z2, 4, nu, TransferMode::standard, 4});
        CHECK(v.constant_term() == 1);
    }
    CHECK_THROWS_AS(vertex_by_transfer({Group::zn, 4, {}, TransferMode::rpc_diag, D}), std::invalid_argument);
}
