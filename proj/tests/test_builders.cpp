#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "mw/builders.hpp"
#include "mw/io.hpp"

using namespace mw;

namespace {

long long binom(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::string data_path(const std::string& file) {
    return std::string(MW_SOURCE_DATA_DIR) + "/" + file;
}

FacetList simplex_boundary_facets(int d) {
    FacetList fl;
    fl.vertex_count = d + 1;
    for (int omit = d; omit >= 0; --omit) {
        std::vector<int> f;
        for (int v = 0; v <= d; ++v)
            if (v != omit) f.push_back(v);
        fl.facets.push_back(std::move(f));
    }
    std::reverse(fl.facets.begin(), fl.facets.end());
    return fl;
}

std::map<int, std::vector<std::pair<int, unsigned>>> partition_of(const DeltaComplex& x) {
    std::map<int, std::vector<std::pair<int, unsigned>>> by_class;
    const unsigned full = (1u << (x.dim() + 1)) - 1u;
    for (int t = 0; t < x.top_count(); ++t)
        for (unsigned m = 1; m <= full; ++m)
            by_class[std::popcount(m) * 1000000 + x.class_of(t, m)].push_back({t, m});
    return by_class;
}

}  // namespace

TEST_CASE("two_pentachora_sphere") {
    DeltaComplex x = two_pentachora_sphere();
    ValidationReport rep = x.validate();
    CHECK(rep.is_closed);
    CHECK(rep.orientable);
    CHECK(x.euler_characteristic() == 2);
    CHECK(x.boundary_info().internal_vertex_count == 5);
}

TEST_CASE("boundary_of_simplex") {
    SECTION("d=3: boundary of the tetrahedron") {
        DeltaComplex x = boundary_of_simplex(3);
        CHECK(x.class_counts() == std::vector<long>{4, 6, 4});
        CHECK(x.euler_characteristic() == 2);
        CHECK(x.is_closed());
    }
    SECTION("d=4: S^3") {
        DeltaComplex x = boundary_of_simplex(4);
        CHECK(x.top_count() == 5);
        CHECK(x.euler_characteristic() == 0);
        CHECK(x.is_closed());
    }
    SECTION("d=5: S^4 with six pentachora") {
        DeltaComplex x = boundary_of_simplex(5);
        CHECK(x.top_count() == 6);
        CHECK(x.euler_characteristic() == 2);
        ValidationReport rep = x.validate();
        CHECK(rep.is_closed);
        CHECK(rep.orientable);
        CHECK(rep.is_pseudo_manifold);
    }
}

TEST_CASE("circle") {
    DeltaComplex x = circle();
    CHECK(x.class_counts() == std::vector<long>{1, 1});
    CHECK(x.euler_characteristic() == 0);
    CHECK(x.is_closed());
}

TEST_CASE("staircase product: torus") {
    DeltaComplex t = staircase_product(circle(), circle());
    CHECK(t.top_count() == 2);
    CHECK(t.class_counts() == std::vector<long>{1, 3, 2});
    CHECK(t.euler_characteristic() == 0);
    CHECK(t.is_closed());
    CHECK(t.orient().orientable);
}

TEST_CASE("staircase product: S^2 x S^2") {
    DeltaComplex x = staircase_product(boundary_of_simplex(3), boundary_of_simplex(3));
    CHECK(x.top_count() == 4 * 4 * binom(4, 2));
    CHECK(x.class_counts()[0] == 16);
    CHECK(x.euler_characteristic() == 4);
    CHECK(x.is_closed());
    CHECK(x.orient().orientable);
}

TEST_CASE("staircase product: S^3 x S^1") {
    DeltaComplex x = staircase_product(boundary_of_simplex(4), circle());
    CHECK(x.top_count() == 20);
    CHECK(x.class_counts()[0] == 5);
    CHECK(x.euler_characteristic() == 0);
    CHECK(x.is_closed());
    CHECK(x.orient().orientable);
    CHECK(x.boundary_info().internal_vertex_count == 5);
}

TEST_CASE("staircase product: chi multiplicativity and top counts") {
    std::vector<DeltaComplex> factors;
    factors.push_back(circle());
    factors.push_back(boundary_of_simplex(3));
    factors.push_back(boundary_of_simplex(4));
    for (const auto& a : factors)
        for (const auto& b : factors) {
            DeltaComplex prod = staircase_product(a, b);
            CHECK(prod.euler_characteristic() ==
                  a.euler_characteristic() * b.euler_characteristic());
            CHECK(prod.top_count() ==
                  a.top_count() * b.top_count() * binom(a.dim() + b.dim(), a.dim()));
            CHECK(prod.is_closed() == (a.is_closed() && b.is_closed()));
            CHECK(prod.orient().orientable);
        }
}

TEST_CASE("iterated products reach S^2 x S^1 x S^1 either way") {
    DeltaComplex left =
        staircase_product(staircase_product(boundary_of_simplex(3), circle()), circle());
    DeltaComplex right =
        staircase_product(boundary_of_simplex(3), staircase_product(circle(), circle()));
    CHECK(left.top_count() == 48);
    CHECK(right.top_count() == 48);
    CHECK(left.euler_characteristic() == 0);
    CHECK(right.euler_characteristic() == 0);
    CHECK(left.is_closed());
    CHECK(right.is_closed());
    CHECK(left.orient().orientable);
    CHECK(right.orient().orientable);
}

TEST_CASE("from_facet_list reproduces boundary_of_simplex") {
    for (int d : {3, 4, 5}) {
        DeltaComplex direct = boundary_of_simplex(d);
        DeltaComplex viaList = from_facet_list(simplex_boundary_facets(d));
        CHECK(viaList.top_count() == direct.top_count());
        CHECK(partition_of(viaList) == partition_of(direct));
    }
}

TEST_CASE("from_facet_list rejects overfull ridges") {
    FacetList fl;
    fl.vertex_count = 5;
    fl.facets = {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}};
    CHECK_THROWS_AS(from_facet_list(fl), input_error);
}

TEST_CASE("from_facet_list rejects unsorted tuples") {
    FacetList fl;
    fl.vertex_count = 3;
    fl.facets = {{1, 0, 2}};
    CHECK_THROWS_AS(from_facet_list(fl), input_error);
}

TEST_CASE("shipped 9-vertex complex projective plane") {
    DeltaComplex x = load_complex_file(data_path("cp2_9.facets"));
    CHECK(x.top_count() == 36);
    CHECK(x.class_counts() == std::vector<long>{9, 36, 84, 90, 36});
    CHECK(x.euler_characteristic() == 3);
    ValidationReport rep = x.validate();
    CHECK(rep.is_closed);
    CHECK(rep.orientable);
    CHECK(rep.is_pseudo_manifold);
}

TEST_CASE("triangulation json round trip") {
    DeltaComplex x = two_pentachora_sphere();
    nlohmann::json j = complex_to_json(x);
    DeltaComplex y = complex_from_json(j);
    CHECK(y.dim() == x.dim());
    CHECK(y.top_count() == x.top_count());
    CHECK(y.class_counts() == x.class_counts());
    CHECK(y.name() == x.name());
}
