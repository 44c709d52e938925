#include <doctest.h>

#include <stdexcept>

#include <set>
#include <tuple>

#include "dtv/rpc.hpp"
#include "dtv/vertex.hpp"

using namespace dtv;

namespace {

using Physical = std::set<std::tuple<int, int, int>>;

Physical physical(const RestrictedConfig& c) {
    Physical s;
    for (auto& b : absolute_bricks(c)) {
        auto p = position(b);
        s.insert({p.x, p.y, p.z});
    }
    return s;
}

int staircase_mho(int m, int k) {
    int a = std::abs(k);
    if (m % 2 == 0) return a <= m ? m - a / 2 : m / 2;
    return a <= m ? m + 1 - (1 + a) / 2 : (m + 1) / 2;
}

// checkerboard pair (color of i+j even cells, color of i+j odd cells) of an
// antidiagonal slice s, selected by the parity of mho
std::pair<int, int> antidiagonal_pair(int s, int mho_value) {
    bool even = mho_value % 2 == 0;
    if (s % 2 == 0) return even ? std::pair{C0, CC} : std::pair{CC, C0};
    if (s > 0) return even ? std::pair{CB, CA} : std::pair{CA, CB};
    return even ? std::pair{CA, CB} : std::pair{CB, CA};
}

}  // namespace

TEST_CASE("epsilon tables") {
    EpsilonTable e0(Partition{});
    CHECK(e0.rho1() == 0);
    CHECK(e0.rho2() == 0);
    EpsilonTable e2(Partition{2, 1});
    CHECK(e2.rho1() == 1);
    CHECK(e2.rho2() == 1);
    EpsilonTable e3(Partition{3, 2, 1});
    CHECK(e3.rho1() == 2);
    CHECK(e3.rho2() == 2);
    for (auto& nu : partitions_up_to(7)) {
        EpsilonTable t(nu);
        CHECK((nu.empty() == (t.rho1() == 0 && t.rho2() == 0)));
        for (int w = 1; w <= 4; ++w) {
            int start = w <= 2 ? 0 : 1;
            CHECK(t.eps(w, start - 1) == 0);
            for (int x = start - 3; x < t.stab() + 4; ++x) {
                int d = t.eps(w, x + 1) - t.eps(w, x);
                CHECK(d >= 0);
                CHECK(d <= 1);
            }
            for (int x = t.stab(); x < t.stab() + 5; ++x) CHECK(t.eps(w, x) == t.eps_inf(w));
        }
        CHECK(t.rho1() == std::max(t.eps_inf(2), t.eps_inf(4)));
        CHECK(t.rho2() == std::max(t.eps_inf(1), t.eps_inf(3)));
    }
}

TEST_CASE("region corners") {
    for (int k = -5; k <= 5; ++k)
        for (Frame f : {Frame::antidiagonal, Frame::diagonal}) {
            auto r = region(Partition{}, 0, f, k);
            CHECK(r.i_min == 0);
            CHECK(r.j_min == 0);
            auto r2 = region(Partition{}, 2, f, k);
            CHECK(r2.i_min == 2);
            CHECK(r2.j_min == 2);
        }
    EpsilonTable t(Partition{1});
    auto r = region(t, 0, Frame::antidiagonal, 0);
    CHECK(r.i_min == t.rho1());
    CHECK(r.j_min == t.rho2());
    CHECK(region(t, 0, Frame::diagonal, 0).i_min == r.i_min);
}

TEST_CASE("mho") {
    CHECK(mho(Partition{2, 1}, 0) == 2);
    CHECK(mho(Partition{2, 1}, 5) == 1);
    for (int k = -4; k <= 4; ++k) CHECK(mho(Partition{}, k) == 0);
    for (int m = 1; m <= 6; ++m)
        for (int k = -m - 3; k <= m + 3; ++k) CHECK(mho(staircase(m), k) == staircase_mho(m, k));
}

TEST_CASE("restriction with the empty leg") {
    for (auto& p : enumerate_pyramids(6)) {
        CHECK(restrict_config(p, Partition{}, 0, Frame::diagonal).slices == p.slices());
        CHECK(restrict_config(p, Partition{}, 0, Frame::antidiagonal).slices == antidiagonal_slices(p));
    }
}

TEST_CASE("restricted slices interlace and carry the expected colors") {
    auto pyramids = enumerate_pyramids(8);
    for (auto nu : {Partition{1}, Partition{2}, Partition{2, 1}, Partition{3, 1}}) {
        EpsilonTable t(nu);
        for (auto& p : pyramids) {
            for (Frame f : {Frame::antidiagonal, Frame::diagonal}) {
                auto c = restrict_config(p, nu, 0, f);
                CHECK(check_type_interlacing(c.slices, nu, InterlaceType::second));
                for (auto& b : absolute_bricks(c)) {
                    auto rs = region(t, 0, f, b.k);
                    int i = b.i - rs.i_min, j = b.j - rs.j_min;
                    int expect = f == Frame::diagonal ? diagonal_slice_color(b.k)
                                 : ((i + j) % 2 == 0 ? antidiagonal_pair(b.k, mho(t, b.k)).first
                                                     : antidiagonal_pair(b.k, mho(t, b.k)).second);
                    CHECK(color(b) == expect);
                }
            }
        }
    }
}

TEST_CASE("symmetric restriction exactly for staircases") {
    auto pyramids = enumerate_pyramids(8);
    for (int m = 1; m <= 3; ++m)
        for (auto& p : pyramids)
            CHECK(physical(restrict_config(p, staircase(m), 0, Frame::antidiagonal)) ==
                  physical(restrict_config(p, staircase(m), 0, Frame::diagonal)));
    for (auto nu : {Partition{2}, Partition{3, 1}}) {
        bool witness = false;
        for (auto& p : pyramids)
            if (physical(restrict_config(p, nu, 0, Frame::antidiagonal)) !=
                physical(restrict_config(p, nu, 0, Frame::diagonal)))
                witness = true;
        CHECK(witness);
    }
}

TEST_CASE("type interlacing") {
    for (auto nu : {Partition{}, Partition{1}, Partition{2, 1}}) {
        CHECK(check_type_interlacing(SliceMap{}, nu, InterlaceType::first));
        CHECK(check_type_interlacing(SliceMap{}, nu, InterlaceType::second));
    }
    for (auto& p : enumerate_pyramids(6)) CHECK(check_type_interlacing(p.slices(), Partition{}, InterlaceType::second));
}

TEST_CASE("realize then restrict is the identity") {
    for (auto nu : {Partition{1}, Partition{2}, Partition{2, 1}, Partition{3, 1}})
        for (int l : {0, 1})
            for (Frame f : {Frame::antidiagonal, Frame::diagonal})
                for (auto& fam : enumerate_interlacing_families(nu, 4)) {
                    auto p = realize(fam, nu, l, f);
                    CHECK(validate(p));
                    CHECK(restrict_config(p, nu, l, f).slices == fam);
                }
    auto base = realize(SliceMap{}, Partition{1}, 0, Frame::antidiagonal);
    CHECK(restrict_config(base, Partition{1}, 0, Frame::antidiagonal).slices.empty());
    for (auto& p : enumerate_pyramids(5)) CHECK(realize(p.slices(), Partition{}, 0, Frame::diagonal) == p);
    // a family that does not interlace is rejected
    CHECK_THROWS(realize(SliceMap{{1, Partition{1}}}, Partition{}, 0, Frame::diagonal));
}

TEST_CASE("region complements") {
    CHECK(region_complement_equal(Partition{2, 1}, 0, 8));
    CHECK_FALSE(region_complement_equal(Partition{2}, 0, 8));
    CHECK(region_complement_equal(Partition{}, 3, 8));
}

TEST_CASE("uniqueness of the symmetric legs") {
    for (int l : {0, 1})
        for (auto& nu : partitions_up_to(6)) {
            bool eq = region_complement_equal(nu, l, 10);
            CHECK(eq == region_complement_equal(nu, l, 12));
            CHECK(eq == is_staircase(nu).has_value());
        }
}

TEST_CASE("restricted generating functions") {
    const int D = 6;
    Series zp = pyramid_generating_function(D);
    CHECK(rpc_generating_function(Partition{}, 0, Frame::antidiagonal, D) == zp);
    CHECK(rpc_generating_function(Partition{}, 0, Frame::diagonal, D) == zp);
    Series plus = rpc_generating_function(Partition{2, 1}, 0, Frame::antidiagonal, D);
    CHECK(plus == rpc_generating_function(Partition{2, 1}, 0, Frame::diagonal, D));
    for (int l : {1, 2}) CHECK(plus == rpc_generating_function(Partition{2, 1}, l, Frame::antidiagonal, D));
    // the two frames disagree away from staircases
    CHECK(rpc_generating_function(Partition{2}, 0, Frame::antidiagonal, D) !=
          rpc_generating_function(Partition{2}, 0, Frame::diagonal, D));
}
