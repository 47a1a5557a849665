#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "interclust/errors.hpp"
#include "interclust/karate.hpp"
#include "interclust/network.hpp"
#include "interclust/rng.hpp"
#include "interclust/simulate.hpp"

using namespace interclust;

namespace {

// the standard unweighted club network, as published
const std::set<std::pair<int, int>>& karate_public_edges() {
    static const std::set<std::pair<int, int>> edges{
        {0,1},{0,2},{0,3},{0,4},{0,5},{0,6},{0,7},{0,8},{0,10},{0,11},{0,12},{0,13},{0,17},{0,19},
        {0,21},{0,31},{1,2},{1,3},{1,7},{1,13},{1,17},{1,19},{1,21},{1,30},{2,3},{2,7},{2,8},{2,9},
        {2,13},{2,27},{2,28},{2,32},{3,7},{3,12},{3,13},{4,6},{4,10},{5,6},{5,10},{5,16},{6,16},
        {8,30},{8,32},{8,33},{9,33},{13,33},{14,32},{14,33},{15,32},{15,33},{18,32},{18,33},{19,33},
        {20,32},{20,33},{22,32},{22,33},{23,25},{23,27},{23,29},{23,32},{23,33},{24,25},{24,27},
        {24,31},{25,31},{26,29},{26,33},{27,33},{28,31},{28,33},{29,32},{29,33},{30,32},{30,33},
        {31,32},{31,33},{32,33}};
    return edges;
}

InteractionArray ratio_fixture() {
    auto a = InteractionArray::trials_agreements(4);
    a.set_pair(0, 1, 10, 7);
    a.set_pair(0, 2, 10, 4);
    a.set_pair(0, 3, 0, 0);
    a.set_pair(1, 2, 10, 9);
    a.set_pair(1, 3, 10, 2);
    a.set_pair(2, 3, 10, 5);
    return a;
}

}  // namespace

TEST_SUITE("network") {

TEST_CASE("cutoff above the maximum empties the edge set") {
    const auto& a = karate_counts();
    CHECK(project(a, ThresholdKind::RawCount, 1000).edge_count() == 0);
}

TEST_CASE("karate projection at zero cutoff is the standard club network") {
    auto net = project(karate_counts(), ThresholdKind::RawCount, 0);
    CHECK(net.edge_count() == 78);
    for (int i = 0; i < 34; ++i)
        for (int j = i + 1; j < 34; ++j)
            CHECK(net.edge(i, j) == (karate_public_edges().count({i, j}) > 0));
    CHECK(net.isolated().empty());
}

TEST_CASE("strict inequality at the cutoff boundary") {
    auto a = InteractionArray::trials_agreements(2);
    a.set_pair(0, 1, 10, 7);
    CHECK(project(a, ThresholdKind::AgreementRatio, 0.7).edge_count() == 0);
    CHECK(project(a, ThresholdKind::AgreementRatio, 0.69).edge_count() == 1);
}

TEST_CASE("threshold kind must match the array kind") {
    auto counts = InteractionArray::counts(2);
    auto ta = InteractionArray::trials_agreements(2);
    CHECK_THROWS_AS(project(counts, ThresholdKind::AgreementRatio, 0.5), data_error);
    CHECK_THROWS_AS(project(ta, ThresholdKind::RawCount, 0.5), data_error);
}

TEST_CASE("pairs with no trials threshold to zero") {
    auto a = ratio_fixture();
    auto net = project(a, ThresholdKind::AgreementRatio, 0.1);
    CHECK(!net.edge(0, 3));  // zero trials -> t = 0, never above a positive cutoff
}

TEST_CASE("edge sets shrink as the cutoff grows") {
    Rng rng(8);
    auto a = simulate_binomial(Partition::parse("0,0,0,1,1,1"), 12, 0.8, 0.4, rng);
    double c1 = 0.3, c2 = 0.6;
    auto n1 = project(a, ThresholdKind::AgreementRatio, c1);
    auto n2 = project(a, ThresholdKind::AgreementRatio, c2);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (n2.edge(i, j)) CHECK(n1.edge(i, j));
}

TEST_CASE("modularity of the whole network in one block is zero") {
    auto net = project(karate_counts(), ThresholdKind::RawCount, 0);
    auto q = ng_modularity(net, Partition::single_block(34));
    REQUIRE(q.has_value());
    CHECK(*q == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("two separated cliques have modularity one half") {
    const int n = 10;
    std::vector<double> w(n * n, 0.0);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            w[i * n + j] = w[j * n + i] = 1;
            w[(5 + i) * n + 5 + j] = w[(5 + j) * n + 5 + i] = 1;
        }
    auto q = ng_modularity(w, n, Partition::parse("0,0,0,0,0,1,1,1,1,1"));
    REQUIRE(q.has_value());
    CHECK(*q == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("modularity equals the exhaustive two-labeling optimum on joined cliques") {
    // two 4-cliques joined by a single bridge edge
    const int n = 8;
    std::vector<double> w(n * n, 0.0);
    auto link = [&](int i, int j) { w[i * n + j] = w[j * n + i] = 1.0; };
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            link(i, j);
            link(4 + i, 4 + j);
        }
    link(3, 4);

    double best = -1;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> lab(n);
        for (int i = 0; i < n; ++i) lab[i] = (mask >> i) & 1;
        best = std::max(best, ng_modularity(w, n, Partition(lab)).value());
    }
    auto q = ng_modularity(w, n, Partition::parse("0,0,0,0,1,1,1,1"));
    CHECK(q.value() == doctest::Approx(best).epsilon(1e-12));
}

TEST_CASE("modularity is undefined without edges") {
    std::vector<double> w(9, 0.0);
    CHECK(!ng_modularity(w, 3, Partition::parse("0,1,0")).has_value());
}

TEST_CASE("modularity stays within its bounds") {
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + rng.uniform_index(6);
        std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.bernoulli(0.5)) w[static_cast<std::size_t>(i) * n + j] = w[static_cast<std::size_t>(j) * n + i] = 1 + rng.uniform_index(3);
        Partition b = ewens_pitman_sample(n, {1.0, 3}, rng);
        auto q = ng_modularity(w, n, b);
        if (q) {
            CHECK(*q >= -0.5 - 1e-12);
            CHECK(*q <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("modularity is invariant under block relabeling") {
    auto net = project(karate_counts(), ThresholdKind::RawCount, 0);
    const auto& split = karate_reference_split();
    auto relabeled = split.labels();
    for (int& l : relabeled) l = 1 - l;
    CHECK(ng_modularity(net, split).value() ==
          doctest::Approx(ng_modularity(net, Partition(relabeled)).value()).epsilon(1e-14));
}

TEST_CASE("classification report basics") {
    Partition ref = Partition::parse("0,0,1,1,1");
    CHECK(classification_report(ref, ref, {}).misclassified == 0);
    CHECK(classification_report(ref, ref, {}).nonclassified == 0);

    // swapped block labels are not errors
    Partition swapped = Partition::parse("1,1,0,0,0");
    CHECK(classification_report(Partition(swapped.labels()), ref, {}).misclassified == 0);

    // one genuinely wrong entity
    Partition wrong = Partition::parse("0,0,0,1,1");
    CHECK(classification_report(wrong, ref, {}).misclassified == 1);

    // isolated entities are reported separately, not as errors
    auto rep = classification_report(wrong, ref, {2});
    CHECK(rep.misclassified == 0);
    CHECK(rep.nonclassified == 1);
    CHECK(rep.total() == 1);
}

TEST_CASE("classification report with unequal block counts") {
    Partition ref = Partition::parse("0,0,1,1");
    Partition three = Partition::parse("0,1,2,2");
    CHECK(classification_report(three, ref, {}).misclassified == 1);
}

TEST_CASE("nearest-rank percentile convention") {
    auto a = ratio_fixture();  // ratios: 0.7, 0.4, 0, 0.9, 0.2, 0.5
    CHECK(percentile_cutoff(a, ThresholdKind::AgreementRatio, 50) == doctest::Approx(0.4));
    CHECK(percentile_cutoff(a, ThresholdKind::AgreementRatio, 0) == doctest::Approx(0.0));
    CHECK(percentile_cutoff(a, ThresholdKind::AgreementRatio, 100) == doctest::Approx(0.9));
    CHECK(percentile_cutoff(a, ThresholdKind::AgreementRatio, 17) == doctest::Approx(0.2));  // ceil(1.02) = 2nd value
    CHECK(percentile_cutoff(a, ThresholdKind::AgreementRatio, 75) == doctest::Approx(0.7));  // ceil(4.5) = 5th value
    CHECK_THROWS_AS(percentile_cutoff(a, ThresholdKind::AgreementRatio, 101), config_error);
}

TEST_CASE("percentile sweep recovers a planted split and is deterministic") {
    Rng rng(2718);
    Partition truth = Partition::parse("0,0,0,0,1,1,1,1");
    auto a = simulate_binomial(truth, 60, 0.9, 0.45, rng);

    SearchConfig cfg;
    cfg.max_blocks = 2;
    cfg.restarts = 12;
    cfg.seed = 7;
    std::vector<double> ps{20, 35, 50, 65, 80};
    auto r1 = percentile_sweep(a, ps, truth, cfg);
    auto r2 = percentile_sweep(a, ps, truth, cfg);
    REQUIRE(r1.rows.size() == ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        CHECK(r1.rows[i].total == r1.rows[i].misclassified + r1.rows[i].nonclassified);
        CHECK(r1.rows[i].cutoff == r2.rows[i].cutoff);
        CHECK(r1.rows[i].misclassified == r2.rows[i].misclassified);
        CHECK(r1.rows[i].nonclassified == r2.rows[i].nonclassified);
    }
    // a mid-range cutoff separates the planted blocks cleanly
    CHECK(r1.rows[2].misclassified == 0);
    CHECK(r1.rows[2].nonclassified == 0);
}

TEST_CASE("degenerate array with equal ratios yields identical rows below the common value") {
    auto a = InteractionArray::trials_agreements(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) a.set_pair(i, j, 10, 5);
    SearchConfig cfg;
    cfg.max_blocks = 2;
    cfg.restarts = 3;
    cfg.seed = 1;
    auto rep = percentile_sweep(a, {10, 40, 70}, Partition::parse("0,0,1,1"), cfg);
    for (const auto& row : rep.rows) {
        CHECK(row.cutoff == doctest::Approx(0.5));
        // cutoff equals the common ratio, strict inequality empties the graph
        CHECK(row.nonclassified == 4);
        CHECK(row.misclassified == 0);
    }
}

TEST_CASE("sweep report csv layout") {
    SweepReport rep;
    rep.rows.push_back({20, 0.5, 12, 0, 12});
    std::ostringstream out;
    std::vector<std::string> comments{"seed=1"};
    rep.write_csv(out, comments);
    CHECK(out.str() == "# seed=1\npercentile,cutoff,misclassified,nonclassified,total\n20,0.5,12,0,12\n");
}

}  // TEST_SUITE
