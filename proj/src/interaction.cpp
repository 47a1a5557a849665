#include "interclust/interaction.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "interclust/errors.hpp"

namespace interclust {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string format_cell(double x) {
    if (x == static_cast<long long>(x) && std::abs(x) < 1e15)
        return std::to_string(static_cast<long long>(x));
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// One header row + n data rows into a dense matrix; returns ids.
std::vector<std::string> read_matrix_block(std::istream& in, std::vector<std::vector<double>>& m,
                                           std::string& pending_line) {
    std::string line = pending_line;
    pending_line.clear();
    while (line.empty() || line[0] == '#') {
        if (!std::getline(in, line)) throw io_error("array csv: missing header row");
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    }
    auto header = split_csv_line(line);
    if (header.size() < 2) throw data_error("array csv: header row needs at least one entity id");
    std::vector<std::string> ids(header.begin() + 1, header.end());
    const int n = static_cast<int>(ids.size());

    m.assign(n, std::vector<double>(n, 0.0));
    for (int r = 0; r < n; ++r) {
        if (!std::getline(in, line)) throw data_error("array csv: expected " + std::to_string(n) + " rows");
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (!line.empty() && line[0] == '#') { --r; continue; }
        auto cells = split_csv_line(line);
        if (static_cast<int>(cells.size()) != n + 1)
            throw data_error("array csv: row " + std::to_string(r) + " has " +
                             std::to_string(cells.size() - 1) + " cells, expected " + std::to_string(n));
        for (int c = 0; c < n; ++c) {
            try {
                m[r][c] = std::stod(cells[c + 1]);
            } catch (const std::exception&) {
                throw data_error("array csv: bad cell '" + cells[c + 1] + "' at row " + std::to_string(r));
            }
        }
    }
    return ids;
}

void write_matrix_block(std::ostream& out, const std::vector<std::string>& ids, int n,
                        const std::function<double(int, int)>& cell) {
    out << "id";
    for (const auto& id : ids) out << ',' << id;
    out << '\n';
    for (int i = 0; i < n; ++i) {
        out << ids[i];
        for (int j = 0; j < n; ++j) out << ',' << format_cell(cell(i, j));
        out << '\n';
    }
}

}  // namespace

InteractionArray::InteractionArray(int n, ArrayKind kind, bool symmetric)
    : n_(n), kind_(kind), symmetric_(symmetric), a_(static_cast<std::size_t>(n) * n, 0.0) {
    if (n < 1) throw data_error("interaction array requires n >= 1");
    if (kind == ArrayKind::TrialsAgreements) v_.assign(static_cast<std::size_t>(n) * n, 0.0);
    ids_.reserve(n);
    for (int i = 0; i < n; ++i) ids_.push_back(std::to_string(i));
}

InteractionArray InteractionArray::counts(int n, bool symmetric) {
    return InteractionArray(n, ArrayKind::Count, symmetric);
}

InteractionArray InteractionArray::trials_agreements(int n, bool symmetric) {
    return InteractionArray(n, ArrayKind::TrialsAgreements, symmetric);
}

void InteractionArray::set_count(int i, int j, double value) {
    if (kind_ != ArrayKind::Count) throw data_error("set_count on a trials-agreements array");
    if (value < 0) throw data_error("negative count");
    a_[idx(i, j)] = value;
    if (symmetric_) a_[idx(j, i)] = value;
}

void InteractionArray::set_pair(int i, int j, double trials, double agreements) {
    if (kind_ != ArrayKind::TrialsAgreements) throw data_error("set_pair on a count array");
    if (trials < 0 || agreements < 0 || agreements > trials)
        throw data_error("agreements must lie in [0, trials]");
    a_[idx(i, j)] = trials;
    v_[idx(i, j)] = agreements;
    if (symmetric_) {
        a_[idx(j, i)] = trials;
        v_[idx(j, i)] = agreements;
    }
}

void InteractionArray::set_ids(std::vector<std::string> ids) {
    if (static_cast<int>(ids.size()) != n_) throw data_error("id list size does not match array size");
    ids_ = std::move(ids);
}

void InteractionArray::validate() const {
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (i == j) continue;
            if (a_[idx(i, j)] < 0) throw data_error("negative cell at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            if (symmetric_ && a_[idx(i, j)] != a_[idx(j, i)])
                throw data_error("asymmetric cell at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            if (kind_ == ArrayKind::TrialsAgreements) {
                if (v_[idx(i, j)] < 0 || v_[idx(i, j)] > a_[idx(i, j)])
                    throw data_error("agreements outside [0, trials] at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                if (symmetric_ && v_[idx(i, j)] != v_[idx(j, i)])
                    throw data_error("asymmetric agreements at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
}

InteractionArray InteractionArray::read_csv(std::istream& in) {
    std::vector<std::vector<double>> m1;
    std::string pending;
    auto ids = read_matrix_block(in, m1, pending);
    const int n = static_cast<int>(ids.size());

    // a second matrix block after a blank line means trials-agreements
    std::string line;
    bool second = false;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        second = true;
        break;
    }

    if (!second) {
        auto arr = InteractionArray::counts(n);
        arr.set_ids(ids);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) arr.a_[arr.idx(i, j)] = m1[i][j];
        arr.validate();
        return arr;
    }

    std::vector<std::vector<double>> m2;
    std::string pending2 = line;
    auto ids2 = read_matrix_block(in, m2, pending2);
    if (ids2 != ids) throw data_error("array csv: agreement block ids differ from trials block ids");
    auto arr = InteractionArray::trials_agreements(n);
    arr.set_ids(ids);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            arr.a_[arr.idx(i, j)] = m1[i][j];
            arr.v_[arr.idx(i, j)] = m2[i][j];
        }
    arr.validate();
    return arr;
}

InteractionArray InteractionArray::read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open array csv: " + path);
    return read_csv(in);
}

void InteractionArray::write_csv(std::ostream& out, std::span<const std::string> header_comments) const {
    for (const auto& c : header_comments) out << "# " << c << '\n';
    write_matrix_block(out, ids_, n_, [this](int i, int j) { return a_[idx(i, j)]; });
    if (kind_ == ArrayKind::TrialsAgreements) {
        out << '\n';
        write_matrix_block(out, ids_, n_, [this](int i, int j) { return v_[idx(i, j)]; });
    }
}

void InteractionArray::write_csv_file(const std::string& path, std::span<const std::string> header_comments) const {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write array csv: " + path);
    write_csv(out, header_comments);
}

}  // namespace interclust
