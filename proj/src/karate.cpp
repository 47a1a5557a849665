#include "interclust/karate.hpp"

#include <cstdint>
#include <sstream>

#include "interclust/errors.hpp"

namespace interclust {

namespace {

// Interaction counts among the 34 club members; entry (i,j) is the number of
// recorded interactions between members i+1 and j+1.
constexpr const char* kKarateTable =
    "0 3 4 2 2 2 2 2 2 0 2 2 1 2 0 0 0 2 0 2 0 2 0 0 0 0 0 0 0 0 0 2 0 0\n"
    "3 0 4 2 0 0 0 3 0 0 0 0 0 4 0 0 0 1 0 2 0 2 0 0 0 0 0 0 0 0 2 0 0 0\n"
    "4 4 0 2 0 0 0 3 3 1 0 0 0 2 0 0 0 0 0 0 0 0 0 0 0 0 0 2 2 0 0 0 2 0\n"
    "2 2 2 0 0 0 0 2 0 0 0 0 2 2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n"
    "2 0 0 0 0 0 2 0 0 0 2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n"
    "2 0 0 0 0 0 4 0 0 0 2 0 0 0 0 0 3 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n"
    "2 0 0 0 2 4 0 0 0 0 0 0 0 0 0 0 3 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n"
    "2 3 3 2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n"
    "2 0 3 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 2 0 2 3\n"
    "0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 2\n"
    "2 0 0 0 2 2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n"
    "2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n"
    "1 0 0 2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n"
    "2 4 2 2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 2\n"
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 2 2\n"
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 2 3\n"
    "0 0 0 0 0 3 3 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n"
    "2 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n"
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 2\n"
    "2 2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1\n"
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 3 1\n"
    "2 2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n"
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 2 3\n"
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 4 0 3 0 3 0 0 4 3\n"
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 2 0 3 0 0 0 2 0 0\n"
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 4 2 0 0 0 0 0 0 5 0 0\n"
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 3 0 0 0 2\n"
    "0 0 2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 3 3 0 0 0 0 0 0 0 0 3\n"
    "0 0 2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 2 0 2\n"
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 3 0 0 3 0 0 0 0 0 3 2\n"
    "0 2 0 0 0 0 0 0 2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 2 3\n"
    "2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 2 5 0 0 2 0 0 0 3 3\n"
    "0 0 2 0 0 0 0 0 2 0 0 0 0 0 2 2 0 0 1 0 3 0 2 4 0 0 0 0 0 3 2 3 0 4\n"
    "0 0 0 0 0 0 0 0 3 2 0 0 0 2 2 3 0 0 2 1 1 0 3 3 0 0 2 3 2 2 3 3 4 0\n";

constexpr std::uint64_t kKarateChecksum = 0xd66a66bfb700e03dull;

// faction membership, 0 = instructor's side
constexpr const char* kFactionSplit =
    "0,0,0,0,0,0,0,0,1,1,0,0,0,0,1,1,0,0,1,0,1,0,1,1,1,1,1,1,1,1,1,1,1,1";

std::uint64_t fnv1a64(const char* s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const char* p = s; *p; ++p) {
        h ^= static_cast<unsigned char>(*p);
        h *= 0x100000001b3ull;
    }
    return h;
}

InteractionArray build_karate() {
    if (fnv1a64(kKarateTable) != kKarateChecksum)
        throw data_error("bundled karate table failed its checksum");

    auto arr = InteractionArray::counts(34);
    std::istringstream in(kKarateTable);
    for (int i = 0; i < 34; ++i)
        for (int j = 0; j < 34; ++j) {
            int x;
            if (!(in >> x)) throw data_error("bundled karate table is truncated");
            if (i < j) arr.set_count(i, j, x);
            else if (i > j && arr.count(i, j) != x) throw data_error("bundled karate table is not symmetric");
            else if (i == j && x != 0) throw data_error("bundled karate table has a non-zero diagonal");
        }
    std::vector<std::string> ids;
    for (int i = 1; i <= 34; ++i) ids.push_back("m" + std::to_string(i));
    arr.set_ids(std::move(ids));
    arr.validate();
    return arr;
}

}  // namespace

const InteractionArray& karate_counts() {
    static const InteractionArray arr = build_karate();
    return arr;
}

const Partition& karate_reference_split() {
    static const Partition split = Partition::parse(kFactionSplit);
    return split;
}

}  // namespace interclust
