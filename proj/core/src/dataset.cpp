#include "svmcoreset/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace svmcoreset {

Vector embed_bias(const Vector& raw) {
    if (raw.size() == 0) throw std::invalid_argument("embed_bias: empty feature vector (d must be >= 1)");
    for (Eigen::Index i = 0; i < raw.size(); ++i) {
        if (!std::isfinite(raw[i])) {
            throw std::invalid_argument("embed_bias: non-finite entry at index " + std::to_string(i));
        }
    }
    Vector out(raw.size() + 1);
    out.head(raw.size()) = raw;
    out[raw.size()] = 1.0;
    return out;
}

Standardization standardize(Matrix& features) {
    const Eigen::Index n = features.rows();
    if (n < 2) throw std::invalid_argument("standardize: need at least 2 rows");
    Standardization st;
    st.mean = features.colwise().mean();
    st.scale = Vector::Ones(features.cols());
    for (Eigen::Index j = 0; j < features.cols(); ++j) {
        features.col(j).array() -= st.mean[j];
        const double var = features.col(j).squaredNorm() / static_cast<double>(n);  // population
        const double sd = std::sqrt(var);
        if (sd > 0.0) {
            st.scale[j] = sd;
            features.col(j) /= sd;
        }
    }
    st.applied = true;
    return st;
}

WeightedDataset::WeightedDataset(Matrix embedded, std::vector<int> labels, Vector weights,
                                 std::vector<std::int64_t> ids)
    : x_(std::move(embedded)), y_(std::move(labels)), u_(std::move(weights)), ids_(std::move(ids)) {
    const std::int64_t n = x_.rows();
    if (x_.cols() < 2) throw std::invalid_argument("WeightedDataset: embedded points need d+1 >= 2 columns");
    if (static_cast<std::int64_t>(y_.size()) != n || u_.size() != n) {
        throw std::invalid_argument("WeightedDataset: labels/weights size mismatch");
    }
    if (ids_.empty()) {
        ids_.resize(static_cast<std::size_t>(n));
        for (std::int64_t i = 0; i < n; ++i) ids_[static_cast<std::size_t>(i)] = i;
    } else if (static_cast<std::int64_t>(ids_.size()) != n) {
        throw std::invalid_argument("WeightedDataset: ids size mismatch");
    }
    dim_ = static_cast<int>(x_.cols()) - 1;
    for (std::int64_t i = 0; i < n; ++i) {
        const int y = y_[static_cast<std::size_t>(i)];
        if (y != 1 && y != -1) throw std::invalid_argument("WeightedDataset: label must be -1 or +1");
        if (!(u_[i] >= 0.0)) throw std::invalid_argument("WeightedDataset: weights must be >= 0");
        if (x_(i, dim_) != 1.0) {
            throw std::invalid_argument("WeightedDataset: bias entry must be exactly 1 (row " +
                                        std::to_string(i) + ")");
        }
        if (!x_.row(i).allFinite()) {
            throw std::invalid_argument("WeightedDataset: non-finite feature (row " + std::to_string(i) + ")");
        }
        (y > 0 ? pos_rows_ : neg_rows_).push_back(i);
    }
    total_weight_ = u_.sum();
}

WeightedDataset WeightedDataset::from_raw(const Matrix& features, std::vector<int> labels,
                                          Vector weights, std::vector<std::int64_t> ids) {
    Matrix embedded(features.rows(), features.cols() + 1);
    embedded.leftCols(features.cols()) = features;
    embedded.col(features.cols()).setOnes();
    return WeightedDataset(std::move(embedded), std::move(labels), std::move(weights), std::move(ids));
}

LabeledPoint WeightedDataset::point(std::int64_t row) const {
    return LabeledPoint{id(row), x_.row(row), label(row), u_[row]};
}

Eigen::RowVectorXd WeightedDataset::signed_vector(std::int64_t row) const {
    return static_cast<double>(label(row)) * x_.row(row);
}

void WeightedDataset::check_invariants() const {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < u_.size(); ++i) sum += u_[i];
    const double tol = 1e-12 * std::max(1.0, std::abs(sum));
    if (std::abs(sum - total_weight_) > tol) {
        throw std::logic_error("WeightedDataset: cached total weight drifted from recomputation");
    }
    if (static_cast<std::int64_t>(pos_rows_.size() + neg_rows_.size()) != size()) {
        throw std::logic_error("WeightedDataset: label index does not partition [0, n)");
    }
    for (std::int64_t i = 0; i < size(); ++i) {
        if (x_(i, dim_) != 1.0) throw std::logic_error("WeightedDataset: bias column corrupted");
    }
}

SplitByLabel split_by_label(const WeightedDataset& ds) {
    if (ds.size() == 0) throw std::invalid_argument("split_by_label: empty dataset");
    SplitByLabel out;
    out.positive = ds.positive_rows();
    out.negative = ds.negative_rows();
    out.one_side_empty = out.positive.empty() || out.negative.empty();
    return out;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        // trim surrounding spaces
        const auto b = field.find_first_not_of(" \t\r");
        const auto e = field.find_last_not_of(" \t\r");
        fields.push_back(b == std::string::npos ? std::string() : field.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_double(const std::string& tok, std::size_t row, std::size_t col) {
    double value = 0.0;
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc() || res.ptr != end) {
        throw std::runtime_error("load_csv: cannot parse number at row " + std::to_string(row) +
                                 ", column " + std::to_string(col) + " ('" + tok + "')");
    }
    return value;
}

int resolve_column(const ColumnRef& ref, const std::vector<std::string>& header, std::size_t ncols,
                   const char* what) {
    if (std::holds_alternative<int>(ref)) {
        const int idx = std::get<int>(ref);
        if (idx < 0 || static_cast<std::size_t>(idx) >= ncols) {
            throw std::runtime_error(std::string("load_csv: ") + what + " column index out of range");
        }
        return idx;
    }
    const std::string& name = std::get<std::string>(ref);
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
        throw std::runtime_error(std::string("load_csv: ") + what + " column '" + name + "' not in header");
    }
    return static_cast<int>(it - header.begin());
}

}  // namespace

LoadedDataset load_csv(const std::string& path, const CsvOptions& options) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_csv: cannot open '" + path + "'");

    std::string line;
    std::vector<std::string> header;
    std::size_t row_number = 0;
    if (options.has_header) {
        if (!std::getline(in, line)) throw std::runtime_error("load_csv: missing header row");
        header = split_line(line);
        ++row_number;
    }

    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    std::vector<double> weights;
    int label_col = -1;
    std::optional<int> weight_col;
    std::size_t ncols = 0;

    while (std::getline(in, line)) {
        ++row_number;
        if (line.empty()) continue;
        const auto fields = split_line(line);
        if (ncols == 0) {
            ncols = fields.size();
            if (ncols < 2) throw std::runtime_error("load_csv: need at least one feature and a label column");
            if (options.has_header && header.size() != ncols) {
                throw std::runtime_error("load_csv: header has " + std::to_string(header.size()) +
                                         " fields but row " + std::to_string(row_number) + " has " +
                                         std::to_string(ncols));
            }
            if (options.label_column) {
                label_col = resolve_column(*options.label_column, header, ncols, "label");
            } else if (options.has_header &&
                       std::find(header.begin(), header.end(), "label") != header.end()) {
                label_col = resolve_column(ColumnRef{std::string("label")}, header, ncols, "label");
            } else {
                label_col = static_cast<int>(ncols) - 1;
            }
            if (options.weight_column) {
                weight_col = resolve_column(*options.weight_column, header, ncols, "weight");
                if (*weight_col == label_col) throw std::runtime_error("load_csv: weight column equals label column");
            } else if (options.has_header &&
                       std::find(header.begin(), header.end(), "weight") != header.end()) {
                weight_col = resolve_column(ColumnRef{std::string("weight")}, header, ncols, "weight");
            }
        }
        if (fields.size() != ncols) {
            throw std::runtime_error("load_csv: row " + std::to_string(row_number) + " has " +
                                     std::to_string(fields.size()) + " fields, expected " +
                                     std::to_string(ncols));
        }
        std::vector<double> feat;
        feat.reserve(ncols - 1);
        for (std::size_t c = 0; c < ncols; ++c) {
            if (static_cast<int>(c) == label_col) {
                const auto it = options.label_tokens.find(fields[c]);
                if (it == options.label_tokens.end()) {
                    throw std::runtime_error("load_csv: unknown label token '" + fields[c] + "' at row " +
                                             std::to_string(row_number));
                }
                labels.push_back(it->second);
            } else if (weight_col && static_cast<int>(c) == *weight_col) {
                weights.push_back(parse_double(fields[c], row_number, c));
            } else {
                feat.push_back(parse_double(fields[c], row_number, c));
            }
        }
        rows.push_back(std::move(feat));
    }
    if (rows.empty()) throw std::runtime_error("load_csv: no data rows in '" + path + "'");

    const std::int64_t n = static_cast<std::int64_t>(rows.size());
    const std::int64_t d = static_cast<std::int64_t>(rows.front().size());
    Matrix features(n, d);
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < d; ++j) features(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    Standardization st;
    if (options.standardize) st = standardize(features);

    Vector u;
    if (weights.empty()) {
        u = Vector::Ones(n);
    } else {
        u = Eigen::Map<Vector>(weights.data(), static_cast<Eigen::Index>(weights.size()));
    }
    LoadedDataset out{
        WeightedDataset::from_raw(features, std::move(labels), std::move(u)),
        st,
        label_col,
        weight_col,
        options.has_header,
        {},
    };
    if (options.has_header) {
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (static_cast<int>(c) != label_col && !(weight_col && static_cast<int>(c) == *weight_col)) {
                out.feature_names.push_back(header[c]);
            }
        }
    }
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void export_csv(const WeightedDataset& ds, const std::string& path, bool header) {
    std::ofstream outf(path);
    if (!outf) throw std::runtime_error("export_csv: cannot open '" + path + "' for writing");
    const int d = ds.dim();
    bool weighted = false;
    for (Eigen::Index i = 0; i < ds.weights().size(); ++i) {
        if (ds.weights()[i] != 1.0) { weighted = true; break; }
    }
    if (header) {
        for (int j = 0; j < d; ++j) outf << 'f' << (j + 1) << ',';
        outf << "label";
        if (weighted) outf << ",weight";
        outf << '\n';
    }
    for (std::int64_t i = 0; i < ds.size(); ++i) {
        for (int j = 0; j < d; ++j) outf << format_double(ds.points()(i, j)) << ',';
        outf << (ds.label(i) > 0 ? "1" : "-1");
        if (weighted) outf << ',' << format_double(ds.weight(i));
        outf << '\n';
    }
    if (!outf) throw std::runtime_error("export_csv: write failed for '" + path + "'");
}

std::string dataset_metadata_json(const LoadedDataset& loaded) {
    nlohmann::json j;
    j["n"] = loaded.data.size();
    j["d"] = loaded.data.dim();
    j["total_weight"] = loaded.data.total_weight();
    j["label_column"] = loaded.label_column;
    j["weight_column"] = loaded.weight_column ? nlohmann::json(*loaded.weight_column) : nlohmann::json();
    j["label_mapping"] = {{"-1", -1}, {"0", -1}, {"1", 1}, {"+1", 1}};
    j["standardized"] = loaded.standardization.applied;
    if (loaded.standardization.applied) {
        j["standardization"]["mean"] = std::vector<double>(
            loaded.standardization.mean.data(), loaded.standardization.mean.data() + loaded.standardization.mean.size());
        j["standardization"]["scale"] = std::vector<double>(
            loaded.standardization.scale.data(), loaded.standardization.scale.data() + loaded.standardization.scale.size());
        j["standardization"]["convention"] = "population";
    }
    return j.dump(2);
}

}  // namespace svmcoreset
