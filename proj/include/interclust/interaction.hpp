#ifndef INTERCLUST_INTERACTION_HPP
#define INTERCLUST_INTERACTION_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace interclust {

enum class ArrayKind { Count, TrialsAgreements };

/// Square array of pairwise interaction measurements over n entities.
/// Count kind stores one non-negative count per cell; trials-agreements kind
/// stores (trials, agreements) with 0 <= agreements <= trials. The diagonal
/// carries no information and is never read by any scoring routine.
class InteractionArray {
public:
    static InteractionArray counts(int n, bool symmetric = true);
    static InteractionArray trials_agreements(int n, bool symmetric = true);

    int size() const { return n_; }
    ArrayKind kind() const { return kind_; }
    bool symmetric() const { return symmetric_; }

    double count(int i, int j) const { return a_[idx(i, j)]; }
    double trials(int i, int j) const { return a_[idx(i, j)]; }
    double agreements(int i, int j) const { return v_[idx(i, j)]; }

    void set_count(int i, int j, double value);
    void set_pair(int i, int j, double trials, double agreements);

    const std::vector<std::string>& ids() const { return ids_; }
    void set_ids(std::vector<std::string> ids);

    /// Checks symmetry, non-negativity and the agreements <= trials invariant.
    void validate() const;

    /// CSV layout: header row of entity ids (first cell "id"); one matrix for
    /// counts, two matrices separated by a blank line (trials first) for the
    /// trials-agreements kind. Lines starting with '#' are comments.
    static InteractionArray read_csv(std::istream& in);
    static InteractionArray read_csv_file(const std::string& path);
    void write_csv(std::ostream& out, std::span<const std::string> header_comments = {}) const;
    void write_csv_file(const std::string& path, std::span<const std::string> header_comments = {}) const;

private:
    InteractionArray(int n, ArrayKind kind, bool symmetric);
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

    int n_ = 0;
    ArrayKind kind_ = ArrayKind::Count;
    bool symmetric_ = true;
    std::vector<double> a_;  // counts, or trials
    std::vector<double> v_;  // agreements (trials-agreements kind only)
    std::vector<std::string> ids_;
};

}  // namespace interclust

#endif
