#include "interclust/rollcall.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "interclust/errors.hpp"

namespace interclust {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

// csv fields with basic double-quote handling
std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (!line.empty() && line[0] != '#') return true;
    }
    return false;
}

Vote parse_vote_token(const std::string& raw) {
    std::string t = lower(raw);
    t.erase(0, t.find_first_not_of(" \t"));
    t.erase(t.find_last_not_of(" \t") + 1);
    if (t == "yea" || t == "y" || t == "1") return Vote::Yea;
    if (t == "nay" || t == "n" || t == "0" || t == "6") return Vote::Nay;
    if (t.empty() || t == "absent" || t == "na" || t == "9") return Vote::Absent;
    throw data_error("unrecognized vote value '" + raw + "'");
}

int find_column(const std::vector<std::string>& header, std::initializer_list<const char*> names) {
    for (const char* name : names) {
        auto it = std::find_if(header.begin(), header.end(),
                               [&](const std::string& h) { return lower(h) == name; });
        if (it != header.end()) return static_cast<int>(it - header.begin());
    }
    return -1;
}

}  // namespace

void RollCall::validate() const {
    if (items.empty()) throw data_error("roll call has no items");
    if (voters.empty()) throw data_error("roll call has no voters");
    if (votes.size() != voters.size() * items.size()) throw data_error("roll call vote table size mismatch");
}

InteractionArray pair_counts(const RollCall& rc) {
    rc.validate();
    const int n = static_cast<int>(rc.voters.size());
    const int m = static_cast<int>(rc.items.size());
    auto arr = InteractionArray::trials_agreements(n);
    arr.set_ids(rc.voters);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            long trials = 0, agree = 0;
            for (int t = 0; t < m; ++t) {
                Vote a = rc.vote(i, t), b = rc.vote(j, t);
                if (a == Vote::Absent || b == Vote::Absent) continue;
                ++trials;
                if (a == b) ++agree;
            }
            arr.set_pair(i, j, static_cast<double>(trials), static_cast<double>(agree));
        }
    }
    return arr;
}

RollCall read_rollcall_matrix_csv(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw io_error("roll-call csv is empty");
    auto header = split_fields(line);
    if (header.size() < 2) throw data_error("roll-call csv header needs item ids");

    RollCall rc;
    rc.items.assign(header.begin() + 1, header.end());
    while (next_line(in, line)) {
        auto cells = split_fields(line);
        if (cells.size() != header.size())
            throw data_error("roll-call csv row for '" + cells[0] + "' has wrong cell count");
        rc.voters.push_back(cells[0]);
        for (std::size_t c = 1; c < cells.size(); ++c) rc.votes.push_back(parse_vote_token(cells[c]));
    }
    rc.validate();
    return rc;
}

RollCall read_rollcall_matrix_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open roll-call csv: " + path);
    return read_rollcall_matrix_csv(in);
}

RollCall read_voteview_csv(std::istream& in, std::optional<int> congress) {
    std::string line;
    if (!next_line(in, line)) throw io_error("voteview csv is empty");
    auto header = split_fields(line);
    const int c_id = find_column(header, {"icpsr", "member", "id"});
    const int c_roll = find_column(header, {"rollnumber", "rollcall", "vote_id"});
    const int c_cast = find_column(header, {"cast_code", "castcode", "vote"});
    const int c_congress = find_column(header, {"congress"});
    if (c_id < 0 || c_roll < 0 || c_cast < 0)
        throw data_error("voteview csv must name icpsr, rollnumber and cast_code columns");
    if (congress && c_congress < 0) throw data_error("voteview csv has no congress column to filter on");

    std::map<std::string, int> voter_index;
    std::map<std::string, int> item_index;
    std::vector<std::tuple<int, int, Vote>> entries;
    std::vector<std::string> voters, items;

    while (next_line(in, line)) {
        auto cells = split_fields(line);
        if (static_cast<int>(cells.size()) <= std::max({c_id, c_roll, c_cast, c_congress})) continue;
        if (congress && std::to_string(*congress) != cells[c_congress]) continue;

        int cast;
        try {
            cast = std::stoi(cells[c_cast]);
        } catch (const std::exception&) {
            throw data_error("voteview cast_code '" + cells[c_cast] + "' is not numeric");
        }
        Vote v = (cast >= 1 && cast <= 3) ? Vote::Yea : (cast >= 4 && cast <= 6) ? Vote::Nay : Vote::Absent;

        auto [vit, vnew] = voter_index.emplace(cells[c_id], static_cast<int>(voters.size()));
        if (vnew) voters.push_back(cells[c_id]);
        auto [iit, inew] = item_index.emplace(cells[c_roll], static_cast<int>(items.size()));
        if (inew) items.push_back(cells[c_roll]);
        entries.emplace_back(vit->second, iit->second, v);
    }
    if (voters.empty()) throw data_error("voteview csv yielded no voters (check the congress filter)");

    RollCall rc;
    rc.voters = std::move(voters);
    rc.items = std::move(items);
    rc.votes.assign(rc.voters.size() * rc.items.size(), Vote::Absent);
    for (auto& [v, i, vote] : entries) rc.votes[static_cast<std::size_t>(v) * rc.items.size() + i] = vote;
    rc.validate();
    return rc;
}

RollCall read_voteview_csv_file(const std::string& path, std::optional<int> congress) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open voteview csv: " + path);
    return read_voteview_csv(in, congress);
}

std::map<std::string, RollCall> read_scdb_csv(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw io_error("scdb csv is empty");
    auto header = split_fields(line);
    const int c_case = find_column(header, {"caseid", "caseissuesid", "docketid"});
    const int c_term = find_column(header, {"term"});
    const int c_justice = find_column(header, {"justicename", "justice"});
    const int c_majority = find_column(header, {"majority"});
    if (c_case < 0 || c_term < 0 || c_justice < 0 || c_majority < 0)
        throw data_error("scdb csv must name caseId, term, justiceName and majority columns");

    struct Raw {
        std::map<std::string, int> voter_index, item_index;
        std::vector<std::string> voters, items;
        std::vector<std::tuple<int, int, Vote>> entries;
    };
    std::map<std::string, Raw> by_term;

    while (next_line(in, line)) {
        auto cells = split_fields(line);
        if (static_cast<int>(cells.size()) <= std::max({c_case, c_term, c_justice, c_majority})) continue;
        Raw& raw = by_term[cells[c_term]];

        // majority: 1 = dissent side, 2 = majority side; anything else absent
        Vote v = Vote::Absent;
        if (cells[c_majority] == "2") v = Vote::Yea;
        else if (cells[c_majority] == "1") v = Vote::Nay;

        auto [vit, vnew] = raw.voter_index.emplace(cells[c_justice], static_cast<int>(raw.voters.size()));
        if (vnew) raw.voters.push_back(cells[c_justice]);
        auto [iit, inew] = raw.item_index.emplace(cells[c_case], static_cast<int>(raw.items.size()));
        if (inew) raw.items.push_back(cells[c_case]);
        raw.entries.emplace_back(vit->second, iit->second, v);
    }
    if (by_term.empty()) throw data_error("scdb csv yielded no terms");

    std::map<std::string, RollCall> out;
    for (auto& [term, raw] : by_term) {
        RollCall rc;
        rc.voters = raw.voters;
        rc.items = raw.items;
        rc.votes.assign(rc.voters.size() * rc.items.size(), Vote::Absent);
        for (auto& [v, i, vote] : raw.entries)
            rc.votes[static_cast<std::size_t>(v) * rc.items.size() + i] = vote;
        rc.validate();
        out.emplace(term, std::move(rc));
    }
    return out;
}

std::map<std::string, RollCall> read_scdb_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open scdb csv: " + path);
    return read_scdb_csv(in);
}

TemporalSeries scdb_series(const std::map<std::string, RollCall>& by_term) {
    TemporalSeries series;
    for (const auto& [term, rc] : by_term) {
        Term t{term, pair_counts(rc)};
        series.terms.push_back(std::move(t));
    }
    return series;
}

}  // namespace interclust
