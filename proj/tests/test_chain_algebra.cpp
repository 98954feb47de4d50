#include <doctest.h>

#include <future>
#include <random>

#include "graphconf/smith.hpp"
#include "support/oracles.hpp"

using namespace graphconf;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long span) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<long> entry(-span, span);
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    return m;
}

}  // namespace

TEST_CASE("smith normal form on textbook inputs") {
    SUBCASE("diag(2,3) has invariant factors 1, 6") {
        SmithDecomposition s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
        CHECK(s.diag(0, 0) == 1);
        CHECK(s.diag(1, 1) == 6);
    }
    SUBCASE("zero 3x2 matrix stays zero") {
        SmithDecomposition s = smith_normal_form(IntMatrix(3, 2));
        CHECK(s.rank() == 0);
        CHECK(s.diag.is_zero());
    }
    SUBCASE("[[2,4],[6,8]] reduces to diag(2, 4)") {
        IntMatrix a{{2, 4}, {6, 8}};
        SmithDecomposition s = smith_normal_form(a);
        CHECK(s.diag(0, 0) == 2);
        CHECK(s.diag(1, 1) == 4);
        CHECK(testsupport::naive_invariant_factors(a) == std::vector<mpz_class>{2, 4});
    }
    SUBCASE("empty matrices are allowed") {
        CHECK(smith_normal_form(IntMatrix(0, 4)).rank() == 0);
        CHECK(smith_normal_form(IntMatrix(4, 0)).rank() == 0);
        CHECK(rank(IntMatrix(0, 0)) == 0);
    }
}

TEST_CASE("smith decomposition invariants on random matrices") {
    std::mt19937_64 rng(20240801);
    for (int trial = 0; trial < 120; ++trial) {
        IntMatrix a = random_matrix(rng, 7, 9);
        SmithDecomposition s = smith_normal_form(a);

        CHECK(s.left * a * s.right == s.diag);

        mpz_class dl = testsupport::bareiss_determinant(s.left);
        mpz_class dr = testsupport::bareiss_determinant(s.right);
        CHECK(abs(dl) == 1);
        CHECK(abs(dr) == 1);

        // Diagonal: non-negative, divisibility chain, zeros trailing.
        auto d = s.diagonal();
        for (std::size_t i = 0; i < d.size(); ++i) {
            CHECK(sgn(d[i]) >= 0);
            if (i + 1 < d.size() && sgn(d[i + 1]) != 0) {
                CHECK(sgn(d[i]) != 0);
                CHECK(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()));
            }
        }
        for (std::size_t i = 0; i < s.diag.rows(); ++i)
            for (std::size_t j = 0; j < s.diag.cols(); ++j)
                if (i != j) CHECK(sgn(s.diag(i, j)) == 0);

        CHECK(rank(a) == testsupport::bareiss_rank(a));

        // Same invariant factors through the gcd-reduction oracle.
        std::vector<mpz_class> ours;
        for (const auto& v : d)
            if (sgn(v) != 0) ours.push_back(v);
        CHECK(ours == testsupport::naive_invariant_factors(a));
    }
}

TEST_CASE("smith normal form is deterministic") {
    std::mt19937_64 rng(7);
    IntMatrix a = random_matrix(rng, 6, 20);
    SmithDecomposition s1 = smith_normal_form(a);
    SmithDecomposition s2 = smith_normal_form(a);
    CHECK(s1.left == s2.left);
    CHECK(s1.right == s2.right);
    CHECK(s1.diag == s2.diag);
}

TEST_CASE("kernel basis") {
    SUBCASE("identity has empty kernel") {
        CHECK(kernel_basis(IntMatrix::identity(4)).cols() == 0);
    }
    SUBCASE("[[1,1]] has kernel (1,-1) up to sign") {
        IntMatrix k = kernel_basis(IntMatrix{{1, 1}});
        REQUIRE(k.cols() == 1);
        CHECK(k(0, 0) == -k(1, 0));
        CHECK(abs(k(0, 0)) == 1);
    }
    SUBCASE("kernel vectors are annihilated and saturated") {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 80; ++trial) {
            IntMatrix a = random_matrix(rng, 5, 6);
            IntMatrix k = kernel_basis(a);
            CHECK(k.cols() == a.cols() - rank(a));
            if (k.cols() > 0) {
                CHECK((a * k).is_zero());
                CHECK(rank(k) == k.cols());

                // Saturation: the gcd of the maximal minors is 1.
                const std::size_t n = k.rows(), c = k.cols();
                std::vector<std::size_t> pick(c);
                mpz_class g = 0;
                // Enumerate all c-subsets of rows.
                std::vector<std::size_t> idx(c);
                for (std::size_t i = 0; i < c; ++i) idx[i] = i;
                while (true) {
                    IntMatrix sub(c, c);
                    for (std::size_t i = 0; i < c; ++i)
                        for (std::size_t j = 0; j < c; ++j) sub(i, j) = k(idx[i], j);
                    mpz_class det = testsupport::bareiss_determinant(sub);
                    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
                    // next combination
                    std::size_t pos = c;
                    while (pos > 0 && idx[pos - 1] == n - c + pos - 1) --pos;
                    if (pos == 0) break;
                    ++idx[pos - 1];
                    for (std::size_t q = pos; q < c; ++q) idx[q] = idx[q - 1] + 1;
                }
                CHECK(g == 1);
            }
        }
    }
}

TEST_CASE("cokernel invariants") {
    SUBCASE("unit diagonal gives trivial cokernel") {
        CokernelInvariants c = cokernel_invariants(IntMatrix{{1, 0}, {0, 1}});
        CHECK(c.free_rank == 0);
        CHECK(c.torsion.empty());
    }
    SUBCASE("[[2]] gives Z/2") {
        CokernelInvariants c = cokernel_invariants(IntMatrix{{2}});
        CHECK(c.free_rank == 0);
        REQUIRE(c.torsion.size() == 1);
        CHECK(c.torsion[0] == 2);
    }
    SUBCASE("zero 3x2 matrix gives free rank 3") {
        CokernelInvariants c = cokernel_invariants(IntMatrix(3, 2));
        CHECK(c.free_rank == 3);
        CHECK(c.torsion.empty());
    }
}

TEST_CASE("lattice solver") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix a = random_matrix(rng, 5, 5);
        LatticeSolver solver(a);

        // Solvable instance: apply A to a random integer vector.
        std::uniform_int_distribution<long> entry(-4, 4);
        std::vector<mpz_class> x(a.cols());
        for (auto& v : x) v = entry(rng);
        auto sol = solver.solve(a.apply(x));
        REQUIRE(sol.has_value());
        CHECK(a.apply(*sol) == a.apply(x));
    }

    SUBCASE("unsolvable system is rejected") {
        LatticeSolver solver(IntMatrix{{2, 0}, {0, 2}});
        CHECK_FALSE(solver.solve({mpz_class(1), mpz_class(0)}).has_value());
        CHECK(solver.solve({mpz_class(2), mpz_class(-4)}).has_value());
    }
}

TEST_CASE("chain homology of a circle-like toy complex") {
    // Two vertices, two parallel 1-cells forming a circle: b0 = b1 = 1.
    IntMatrix d1{{1, 1}, {-1, -1}};
    HomologySummary h = chain_homology({2, 2}, {&d1});
    CHECK(h.betti == std::vector<std::size_t>{1, 1});
    CHECK(h.torsion[0].empty());
}

TEST_CASE("smith reduction is safe to run concurrently") {
    std::mt19937_64 rng(4242);
    IntMatrix shared = random_matrix(rng, 7, 8);
    SmithDecomposition reference = smith_normal_form(shared);

    std::vector<std::future<SmithDecomposition>> jobs;
    for (int t = 0; t < 8; ++t)
        jobs.push_back(std::async(std::launch::async,
                                  [&shared] { return smith_normal_form(shared); }));
    for (auto& job : jobs) {
        SmithDecomposition s = job.get();
        CHECK(s.diag == reference.diag);
        CHECK(s.left == reference.left);
        CHECK(s.right == reference.right);
    }
}
