#include <catch2/catch_amalgamated.hpp>

#include <cozeta/partitions.hpp>
#include <cozeta/variety.hpp>

using namespace cozeta;

TEST_CASE("partitions_of: order and counts") {
    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0].parts == std::vector<long>{4});
    CHECK(p4[1].parts == std::vector<long>{3, 1});
    CHECK(p4[2].parts == std::vector<long>{2, 2});
    CHECK(p4[3].parts == std::vector<long>{2, 1, 1});
    CHECK(p4[4].parts == std::vector<long>{1, 1, 1, 1});

    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].parts.empty());

    const long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (long n = 0; n <= 10; ++n)
        CHECK(partitions_of(n).size() == static_cast<std::size_t>(expected[n]));
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS((Partition{{1, 2}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Partition{{0}}.validate()), std::invalid_argument);
    CHECK_NOTHROW((Partition{{3, 3, 1}}.validate()));
}

TEST_CASE("stats: n(lambda), multiplicities, pairing") {
    PartitionStats s = stats(Partition{{2, 1}});
    CHECK(s.n_lambda == 1);
    CHECK(s.pairing == 5);
    CHECK(s.mult == std::map<long, long>{{1, 1}, {2, 1}});

    s = stats(Partition{{1, 1, 1}});
    CHECK(s.n_lambda == 3);
    CHECK(s.pairing == 9);
    CHECK(s.mult == std::map<long, long>{{1, 3}});

    s = stats(Partition{{}});
    CHECK(s.pairing == 0);
}

TEST_CASE("phi_m") {
    CHECK(phi(0) == QPoly{{0, 1}});
    CHECK(phi(1) == QPoly{{0, 1}, {1, -1}});
    // (1-q)(1-q^2) = 1 - q - q^2 + q^3
    CHECK(phi(2) == QPoly{{0, 1}, {1, -1}, {2, -1}, {3, 1}});
    CHECK(qpoly_eval(phi(3), Rat(2)) == Rat((1 - 2) * (1 - 4) * (1 - 8)));
}

TEST_CASE("a_lambda: hooks to centralizer orders") {
    // a_{(1)} = q - 1
    CHECK(a_lambda(Partition{{1}}) == QPoly{{1, 1}, {0, -1}});
    // a_{(n)} = q^n - q^{n-1}
    CHECK(a_lambda(Partition{{3}}) == QPoly{{3, 1}, {2, -1}});
    // a_{(1^n)} = |GL_n|
    for (long n = 1; n <= 4; ++n)
        CHECK(a_lambda(Partition{std::vector<long>(n, 1)}) == gl_order_poly(n));
    // a_{(2,1)}(2) = 8
    CHECK(a_lambda_at(Partition{{2, 1}}, 2) == 8);
    CHECK(a_lambda(Partition{{2, 1}}) == QPoly{{5, 1}, {4, -2}, {3, 1}});
}

TEST_CASE("sum over |lambda|=n of |GL_n|/a_lambda = unipotent count q^{n^2-n}") {
    for (long q : {2L, 3L})
        for (long n = 1; n <= 4; ++n) {
            Rat sum = 0;
            for (const Partition &lam : partitions_of(n))
                sum += Rat(gl_order_int(n, q)) / a_lambda_at(lam, q);
            CHECK(sum == Rat(int_pow(Int(q), n * n - n)));
        }
}
