#ifndef INTERCLUST_ROLLCALL_HPP
#define INTERCLUST_ROLLCALL_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "interclust/interaction.hpp"
#include "interclust/temporal.hpp"

namespace interclust {

enum class Vote : std::uint8_t { Yea, Nay, Absent };

/// Raw voting record: one value per (voter, item).
struct RollCall {
    std::vector<std::string> voters;
    std::vector<std::string> items;
    std::vector<Vote> votes;  // voters x items, row-major

    Vote vote(int voter, int item) const { return votes[static_cast<std::size_t>(voter) * items.size() + item]; }
    void validate() const;
};

/// N_ij = number of items on which both i and j voted; V_ij = how many of
/// those votes coincide. Symmetric trials-agreements array.
InteractionArray pair_counts(const RollCall& rc);

/// Matrix layout: header "voter,<item ids...>", one row per voter, cells in
/// {yea,y,1 | nay,n,0,6 | absent,na,9,<empty>} (case-insensitive).
RollCall read_rollcall_matrix_csv(std::istream& in);
RollCall read_rollcall_matrix_csv_file(const std::string& path);

/// Voteview-style long format: one row per (member, roll call) with columns
/// icpsr, rollnumber and cast_code (1-3 yea, 4-6 nay, otherwise absent),
/// located by header name. Optional filter on the congress column.
RollCall read_voteview_csv(std::istream& in, std::optional<int> congress = std::nullopt);
RollCall read_voteview_csv_file(const std::string& path, std::optional<int> congress = std::nullopt);

/// Supreme Court Database justice-centered vote file: columns term,
/// justiceName (or justice) and majority (1 dissent side, 2 majority side,
/// anything else absent), caseId as the item. One roll call per term.
std::map<std::string, RollCall> read_scdb_csv(std::istream& in);
std::map<std::string, RollCall> read_scdb_csv_file(const std::string& path);

/// Per-term agreement arrays from an SCDB ingest, terms in ascending order.
TemporalSeries scdb_series(const std::map<std::string, RollCall>& by_term);

}  // namespace interclust

#endif
