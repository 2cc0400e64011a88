#include "qce/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "qce/families.hpp"

namespace qce {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw domain_error(message); }

void require_keys(const json& doc, const std::set<std::string>& allowed,
                  const std::string& context) {
    if (!doc.is_object()) {
        fail(context + " must be a JSON object");
    }
    for (const auto& item : doc.items()) {
        if (!allowed.count(item.key())) {
            fail("unknown field \"" + item.key() + "\" in " + context);
        }
    }
}

double number_field(const json& doc, const std::string& key) {
    if (!doc.contains(key) || !doc[key].is_number()) {
        fail("missing or non-numeric field \"" + key + "\"");
    }
    return doc[key].get<double>();
}

int int_field(const json& doc, const std::string& key) {
    if (!doc.contains(key) || !doc[key].is_number_integer()) {
        fail("missing or non-integer field \"" + key + "\"");
    }
    return doc[key].get<int>();
}

Complex parse_complex_entry(const json& entry) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
        fail("complex entries must be [re, im] pairs");
    }
    return Complex(entry[0].get<double>(), entry[1].get<double>());
}

MatrixXcd parse_complex_matrix(const json& entries, int dim) {
    if (!entries.is_array() || static_cast<int>(entries.size()) != dim * dim) {
        fail("matrix must be a row-major list of " + std::to_string(dim * dim) +
             " [re, im] pairs");
    }
    MatrixXcd m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            m(i, j) = parse_complex_entry(entries[i * dim + j]);
        }
    }
    return m;
}

VectorXcd parse_complex_vector(const json& entries) {
    if (!entries.is_array() || entries.empty()) {
        fail("ket must be a non-empty list of [re, im] pairs");
    }
    VectorXcd v(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        v(static_cast<int>(i)) = parse_complex_entry(entries[i]);
    }
    return v;
}

std::vector<double> probability_list(const json& value, const std::string& name) {
    std::vector<double> q;
    if (value.is_number()) {  // two-outcome shorthand: q and 1-q
        const double head = value.get<double>();
        q = {head, 1.0 - head};
    } else if (value.is_array()) {
        for (const auto& entry : value) {
            if (!entry.is_number()) {
                fail(name + " must contain numbers");
            }
            q.push_back(entry.get<double>());
        }
    } else {
        fail(name + " must be a number or a list");
    }
    return q;
}

}  // namespace

BipartiteState build_family(const std::string& name, const json& params) {
    if (name == "x_state") {
        require_keys(params, {"ra", "rb", "jx", "jy", "jz"}, "x_state params");
        XStateParams p;
        p.r_a = number_field(params, "ra");
        p.r_b = number_field(params, "rb");
        p.j_x = number_field(params, "jx");
        p.j_y = number_field(params, "jy");
        p.j_z = number_field(params, "jz");
        return x_state(p);
    }
    if (name == "pure_plus_mixed") {
        require_keys(params, {"w", "q", "dA", "dB"}, "pure_plus_mixed params");
        const int dim_a = params.contains("dA") ? int_field(params, "dA") : 2;
        const int dim_b = params.contains("dB") ? int_field(params, "dB") : 2;
        if (!params.contains("q")) {
            fail("pure_plus_mixed needs a Schmidt vector q");
        }
        return pure_plus_mixed(number_field(params, "w"),
                               probability_list(params["q"], "q"), dim_a, dim_b);
    }
    if (name == "aligned") {
        require_keys(params, {"theta"}, "aligned params");
        return aligned_mixture(number_field(params, "theta"));
    }
    if (name == "classical") {
        require_keys(params, {"weights", "states", "dB"}, "classical params");
        if (!params.contains("weights") || !params.contains("states")) {
            fail("classical family needs weights and states");
        }
        std::vector<double> weights = probability_list(params["weights"], "weights");
        std::vector<DensityMatrix> states;
        for (const auto& entry : params["states"]) {
            const int dim = static_cast<int>(std::lround(std::sqrt(entry.size())));
            states.emplace_back(parse_complex_matrix(entry, dim));
        }
        const int dim_b =
            params.contains("dB") ? int_field(params, "dB") : static_cast<int>(weights.size());
        return classically_correlated(weights, states, dim_b);
    }
    if (name == "xy_pair") {
        if (params.contains("alpha")) {
            require_keys(params, {"alpha", "i", "j"}, "xy_pair params");
            const auto& rows = params["alpha"];
            const int n = static_cast<int>(rows.size());
            Eigen::MatrixXd alpha(n, n);
            for (int r = 0; r < n; ++r) {
                if (static_cast<int>(rows[r].size()) != n) {
                    fail("alpha must be a square matrix");
                }
                for (int c = 0; c < n; ++c) {
                    alpha(r, c) = rows[r][c].get<double>();
                }
            }
            return xy_strong_field_pair(alpha, int_field(params, "i"), int_field(params, "j"));
        }
        require_keys(params, {"sites", "jx", "jy", "b", "i", "j"}, "xy_pair params");
        const Eigen::MatrixXd alpha =
            xy_chain_amplitudes(int_field(params, "sites"), number_field(params, "jx"),
                                number_field(params, "jy"), number_field(params, "b"));
        return xy_strong_field_pair(alpha, int_field(params, "i"), int_field(params, "j"));
    }
    fail("unknown state family \"" + name + "\"");
}

BipartiteState parse_state(const json& doc) {
    if (doc.contains("family")) {
        require_keys(doc, {"family", "params"}, "state document");
        if (!doc["family"].is_string()) {
            fail("family must be a string");
        }
        return build_family(doc["family"].get<std::string>(),
                            doc.contains("params") ? doc["params"] : json::object());
    }
    require_keys(doc, {"dA", "dB", "matrix"}, "state document");
    const int dim_a = int_field(doc, "dA");
    const int dim_b = int_field(doc, "dB");
    if (dim_a < 1 || dim_b < 1) {
        fail("dA and dB must be positive");
    }
    if (!doc.contains("matrix")) {
        fail("state document needs a matrix");
    }
    return BipartiteState(dim_a, dim_b,
                          DensityMatrix(parse_complex_matrix(doc["matrix"], dim_a * dim_b)));
}

BipartiteState load_state(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        fail("cannot open state file " + path);
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& err) {
        fail("state file " + path + " is not valid JSON: " + err.what());
    }
    return parse_state(doc);
}

Rank1Povm parse_measurement(const json& doc) {
    require_keys(doc, {"type", "k", "elements"}, "measurement document");
    if (!doc.contains("type") || !doc["type"].is_string()) {
        fail("measurement needs a type");
    }
    const std::string type = doc["type"].get<std::string>();
    if (type == "direction") {
        if (!doc.contains("k") || !doc["k"].is_array() || doc["k"].size() != 3) {
            fail("direction measurement needs k = [kx, ky, kz]");
        }
        const Eigen::Vector3d k(doc["k"][0].get<double>(), doc["k"][1].get<double>(),
                                doc["k"][2].get<double>());
        return projective_from_direction(QubitDirection(k));
    }
    if (type == "povm") {
        if (!doc.contains("elements") || !doc["elements"].is_array()) {
            fail("povm measurement needs an elements list");
        }
        std::vector<PovmElement> elements;
        for (const auto& entry : doc["elements"]) {
            require_keys(entry, {"r", "ket"}, "povm element");
            VectorXcd ket = parse_complex_vector(entry["ket"]);
            elements.push_back(PovmElement{number_field(entry, "r"), ket / ket.norm()});
        }
        return Rank1Povm(std::move(elements));
    }
    fail("unknown measurement type \"" + type + "\"");
}

Rank1Povm load_measurement(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        fail("cannot open measurement file " + path);
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& err) {
        fail("measurement file " + path + " is not valid JSON: " + err.what());
    }
    return parse_measurement(doc);
}

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

CsvWriter::CsvWriter(std::vector<std::string> columns, std::uint64_t seed)
    : columns_(std::move(columns)), seed_(seed) {}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_.size()) {
        fail("CSV row width does not match the header");
    }
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    lines_.push_back(std::move(line));
}

void CsvWriter::add_comment(const std::string& text) { trailing_comments_.push_back(text); }

std::string CsvWriter::str() const {
    std::ostringstream out;
    out << "# seed=" << seed_ << "\n";
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        out << (i ? "," : "") << columns_[i];
    }
    out << "\n";
    for (const std::string& line : lines_) {
        out << line << "\n";
    }
    for (const std::string& comment : trailing_comments_) {
        out << "# " << comment << "\n";
    }
    return out.str();
}

void CsvWriter::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        fail("cannot open output file " + path);
    }
    out << str();
}

}  // namespace qce
