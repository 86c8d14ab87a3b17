#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

namespace svmcoreset {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// One labeled training point: embedded feature vector x (last entry 1),
/// label y in {-1,+1} and nonnegative weight u.
struct LabeledPoint {
    std::int64_t id = 0;
    Eigen::RowVectorXd x;  // length d+1
    int y = 1;
    double u = 1.0;
};

/// Appends the bias entry 1 to a raw feature vector. Rejects empty or
/// non-finite input (the offending index is reported).
Vector embed_bias(const Vector& raw);

/// Per-feature affine transform captured by standardize().
struct Standardization {
    Vector mean;
    Vector scale;  // population std; constant columns keep scale 1
    bool applied = false;
};

/// Centers every column to mean 0 and rescales to unit population (1/n) std.
/// Constant columns are centered and left unscaled. Requires n >= 2 rows.
Standardization standardize(Matrix& features);

/// Immutable weighted point set: rows of `points()` are embedded vectors in
/// R^{d+1} with the trailing bias 1, plus labels, weights and a per-label
/// index over row positions. Safe to share read-only across threads.
class WeightedDataset {
public:
    WeightedDataset(Matrix embedded, std::vector<int> labels, Vector weights,
                    std::vector<std::int64_t> ids = {});

    /// Builds from raw (un-embedded) features; appends the bias column.
    static WeightedDataset from_raw(const Matrix& features, std::vector<int> labels,
                                    Vector weights, std::vector<std::int64_t> ids = {});

    std::int64_t size() const { return x_.rows(); }
    int dim() const { return dim_; }  // ambient feature dimension, pre-embedding

    const Matrix& points() const { return x_; }
    const Vector& weights() const { return u_; }
    const std::vector<int>& labels() const { return y_; }

    int label(std::int64_t row) const { return y_[static_cast<std::size_t>(row)]; }
    double weight(std::int64_t row) const { return u_[row]; }
    std::int64_t id(std::int64_t row) const { return ids_[static_cast<std::size_t>(row)]; }
    const std::vector<std::int64_t>& ids() const { return ids_; }

    double total_weight() const { return total_weight_; }

    /// Row positions holding label +1 / -1; together they partition [0, n).
    const std::vector<std::int64_t>& positive_rows() const { return pos_rows_; }
    const std::vector<std::int64_t>& negative_rows() const { return neg_rows_; }
    const std::vector<std::int64_t>& rows_with_label(int y) const {
        return y > 0 ? pos_rows_ : neg_rows_;
    }
    bool single_label() const { return pos_rows_.empty() || neg_rows_.empty(); }

    LabeledPoint point(std::int64_t row) const;

    /// y * x for one row; the last entry equals the label.
    Eigen::RowVectorXd signed_vector(std::int64_t row) const;

    /// Recomputes the construction invariants (total weight within relative
    /// 1e-12, label index partition, bias column). Throws on violation.
    void check_invariants() const;

private:
    Matrix x_;                        // n x (d+1)
    std::vector<int> y_;              // entries in {-1, +1}
    Vector u_;                        // nonnegative weights
    std::vector<std::int64_t> ids_;   // provenance ids (origin row by default)
    double total_weight_ = 0.0;
    int dim_ = 0;
    std::vector<std::int64_t> pos_rows_, neg_rows_;
};

struct SplitByLabel {
    std::vector<std::int64_t> positive;
    std::vector<std::int64_t> negative;
    bool one_side_empty = false;
};

/// Disjoint, exhaustive partition of row positions by label. Errors on an
/// empty dataset; an empty side is allowed but flagged.
SplitByLabel split_by_label(const WeightedDataset& ds);

/// Column selector: by 0-based index or by header name.
using ColumnRef = std::variant<int, std::string>;

struct CsvOptions {
    bool has_header = true;
    std::optional<ColumnRef> label_column;   // default: "label" with header, else last column
    std::optional<ColumnRef> weight_column;  // absent -> unit weights
    bool standardize = false;
    /// Accepted label tokens; by convention "0"/"-1" -> -1, "1"/"+1" -> +1.
    std::map<std::string, int> label_tokens = {{"-1", -1}, {"0", -1}, {"1", 1}, {"+1", 1}};
};

struct LoadedDataset {
    WeightedDataset data;
    Standardization standardization;
    int label_column = -1;
    std::optional<int> weight_column;
    bool had_header = false;
    std::vector<std::string> feature_names;
};

/// Parses a delimiter-',' CSV of d feature columns plus a label column (and
/// an optional weight column). Parse failures report row and column; unknown
/// label tokens are rejected. Standardization, when requested, happens before
/// the bias embedding.
LoadedDataset load_csv(const std::string& path, const CsvOptions& options = {});

/// Writes the dataset back out as feature columns + label (+ weight when any
/// weight differs from 1). Doubles are printed with 17 significant digits so
/// a reload reproduces them bit-identically. The bias column is dropped.
void export_csv(const WeightedDataset& ds, const std::string& path, bool header = true);

/// JSON metadata for a loaded/exported dataset (n, d, standardization
/// constants, label mapping). Written next to the primary output by the CLI.
std::string dataset_metadata_json(const LoadedDataset& loaded);

/// Deterministic 17-significant-digit rendering used by every CSV writer.
std::string format_double(double v);

}  // namespace svmcoreset
