#include <random>

#include <catch_amalgamated.hpp>

#include "edgecode/torus_code.hpp"

using namespace edgecode;

TEST_CASE("torus enumeration: size, order, determinism") {
    const Field f3(3);
    auto pts = enumerate_torus(f3, 5);
    REQUIRE(pts.size() == 32);
    REQUIRE(pts.front() == std::vector<Elem>{1, 1, 1, 1, 1});
    REQUIRE(pts.back() == std::vector<Elem>{2, 2, 2, 2, 2});
    // lexicographic, coordinate 1 most significant
    REQUIRE(pts[1] == std::vector<Elem>{1, 1, 1, 1, 2});
    REQUIRE(pts[16] == std::vector<Elem>{2, 1, 1, 1, 1});

    const Field f4(4);
    auto line = enumerate_torus(f4, 1);
    REQUIRE(line == std::vector<std::vector<Elem>>{{1}, {2}, {3}});

    const Field f2(2);
    auto degenerate = enumerate_torus(f2, 3);
    REQUIRE(degenerate == std::vector<std::vector<Elem>>{{1, 1, 1}});

    REQUIRE_THROWS_AS(torus_size(3, 40), TooLarge);
}

TEST_CASE("evaluate") {
    const Field f3(3);
    const auto p4 = path_graph(4);
    EdgePolynomial mono{p4, {1, 0, 0}};
    REQUIRE(evaluate(f3, mono, {2, 2, 1, 1}) == 1); // 2*2 = 4 = 1 mod 3

    EdgePolynomial zero{p4, {0, 0, 0}};
    for (const auto& pt : enumerate_torus(f3, 4)) REQUIRE(evaluate(f3, zero, pt) == 0);

    EdgePolynomial all{p4, {1, 1, 1}};
    REQUIRE(evaluate(f3, all, {1, 1, 1, 1}) == 0); // 1+1+1 = 0 mod 3
}

TEST_CASE("generator matrix shapes and rank") {
    const Field f3(3);
    const EdgeCode p4(f3, path_graph(4));
    REQUIRE(p4.length() == 16);
    REQUIRE(p4.dimension_bound() == 3);
    REQUIRE(p4.rank() == 3);

    const EdgeCode single(f3, make_hypergraph(2, {{1, 2}}));
    REQUIRE(single.length() == 4);
    REQUIRE(single.rows()[0] == std::vector<Elem>{1, 2, 2, 1});
    REQUIRE(single.rank() == 1);

    const EdgeCode k5(f3, complete_graph(5));
    REQUIRE(k5.length() == 32);
    REQUIRE(k5.rank() == 10);

    REQUIRE_THROWS_AS(EdgeCode(Field(2), path_graph(4)), DegenerateField);
}

TEST_CASE("rank equals |E| across the catalog and fields") {
    for (unsigned q : {3u, 4u, 5u}) {
        const Field f(q);
        for (const auto& entry : five_vertex_catalog()) {
            const EdgeCode code(f, entry.graph);
            INFO("graph " << entry.id << " over GF(" << q << ")");
            REQUIRE(code.rank() == code.dimension_bound());
        }
    }
}

TEST_CASE("encode: linearity, unit vectors, weight identity") {
    const Field f3(3);
    const EdgeCode code(f3, path_graph(4));

    REQUIRE(code.encode({0, 0, 0}) == std::vector<Elem>(16, 0));
    // a monomial row never vanishes on the torus
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<Elem> unit(3, 0);
        unit[i] = 1;
        REQUIRE(code.encode(unit) == code.rows()[i]);
        REQUIRE(code.weight(unit) == 16);
    }
    // Hamming weight 12 = 16 - (q-1)^2 (q-2) zeros
    REQUIRE(code.weight({1, 1, 1}) == 12);
    REQUIRE_THROWS_AS(code.encode({1, 0}), LengthMismatch);

    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        std::vector<Elem> a(3), b(3);
        for (auto& x : a) x = static_cast<Elem>(rng() % 3);
        for (auto& x : b) x = static_cast<Elem>(rng() % 3);
        const Elem scalar = static_cast<Elem>(1 + rng() % 2);
        auto sum = a;
        for (std::size_t i = 0; i < 3; ++i) sum[i] = f3.add(a[i], b[i]);
        auto ea = code.encode(a), eb = code.encode(b);
        auto esum = code.encode(sum);
        std::vector<Elem> expect(16);
        for (std::size_t c = 0; c < 16; ++c) expect[c] = f3.add(ea[c], eb[c]);
        REQUIRE(esum == expect);
        auto scaled = a;
        for (auto& x : scaled) x = f3.mul(scalar, x);
        auto escaled = code.encode(scaled);
        for (std::size_t c = 0; c < 16; ++c) REQUIRE(escaled[c] == f3.mul(scalar, ea[c]));
        REQUIRE(code.weight(a) + code.count_zeros(a) == 16);
    }
}

TEST_CASE("count_zeros matches the published path table at q=3") {
    const Field f3(3);
    const EdgeCode code(f3, path_graph(4));
    REQUIRE(code.count_zeros({1, 0, 0}) == 0);
    REQUIRE(code.count_zeros({1, 1, 0}) == 8);  // (t1+t3)t2
    REQUIRE(code.count_zeros({1, 0, 1}) == 8);  // t1t2 + t3t4
    REQUIRE(code.count_zeros({1, 1, 1}) == 4);  // (q-1)^2 (q-2)
}

TEST_CASE("gram matrix examples") {
    const Field f4(4);
    const EdgeCode one4(f4, make_hypergraph(1, {{1}}));
    REQUIRE(one4.gram_matrix() == std::vector<std::vector<Elem>>{{0}});
    REQUIRE(one4.is_self_orthogonal());

    const Field f3(3);
    const EdgeCode one3(f3, make_hypergraph(1, {{1}}));
    REQUIRE(one3.gram_matrix() == std::vector<std::vector<Elem>>{{2}});
    REQUIRE_FALSE(one3.is_self_orthogonal());

    const EdgeCode disjoint(f4, make_hypergraph(4, {{1, 2}, {3, 4}}));
    REQUIRE(disjoint.gram_matrix()[0][1] == 0);
}

TEST_CASE("gram entries factor into character sums") {
    for (unsigned q : {3u, 4u, 5u}) {
        const Field f(q);
        for (const auto& h : {path_graph(4), cycle_graph(5), interval_hypergraph(3, 2, 1)}) {
            const EdgeCode code(f, h);
            const auto gram = code.gram_matrix();
            for (std::size_t i = 0; i < h.edges.size(); ++i)
                for (std::size_t j = 0; j < h.edges.size(); ++j) {
                    Elem expect = 1;
                    for (int v = 1; v <= h.s; ++v) {
                        unsigned e = 0;
                        if (std::binary_search(h.edges[i].begin(), h.edges[i].end(), v)) ++e;
                        if (std::binary_search(h.edges[j].begin(), h.edges[j].end(), v)) ++e;
                        expect = f.mul(expect, f.character_sum(e));
                    }
                    REQUIRE(gram[i][j] == expect);
                }
        }
    }
}

TEST_CASE("CSV and JSON export") {
    const Field f3(3);
    const EdgeCode code(f3, make_hypergraph(2, {{1, 2}}));
    REQUIRE(code.export_csv() == "1,2,2,1\n");

    const auto j = code.export_json();
    REQUIRE(j["q"] == 3);
    REQUIRE(j["s"] == 2);
    REQUIRE(j["point_order"] == "lex-canonical");
    REQUIRE(j["matrix"][0] == nlohmann::json({1, 2, 2, 1}));
}
