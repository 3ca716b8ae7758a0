#include "symfact/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace symfact {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string render_matrix(const DenseMatrix& a) {
    std::ostringstream out;
    out << a.rows() << " " << a.cols() << "\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) out << " ";
            out << format_double(a(i, j));
        }
        out << "\n";
    }
    return out.str();
}

DenseMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    long long rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows < 1 || cols < 1) {
        throw ParseError("matrix file must start with a 'rows cols' header");
    }
    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(rows * cols));
    double v = 0.0;
    while (in >> v) entries.push_back(v);
    if (entries.size() != static_cast<std::size_t>(rows * cols)) {
        throw ParseError("matrix file has " + std::to_string(entries.size()) +
                         " entries, expected " + std::to_string(rows * cols));
    }
    return DenseMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                       std::move(entries));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

DenseMatrix load_matrix(const std::string& path) { return parse_matrix(read_file(path)); }

void save_matrix(const std::string& path, const DenseMatrix& a) {
    write_file(path, render_matrix(a));
}

ordered_json spec_to_json(const SpectrumSpec& spec) {
    ordered_json j;
    j["schema"] = "v1";
    j["real_blocks"] = ordered_json::array();
    for (const auto& b : spec.real_blocks) {
        j["real_blocks"].push_back({{"lambda", b.lambda}, {"ell", b.ell}});
    }
    j["complex_blocks"] = ordered_json::array();
    for (const auto& b : spec.complex_blocks) {
        j["complex_blocks"].push_back({{"a", b.a}, {"b", b.b}, {"ell", b.ell}});
    }
    return j;
}

SpectrumSpec spec_from_json(const ordered_json& j) {
    SpectrumSpec spec;
    try {
        for (const auto& b : j.value("real_blocks", ordered_json::array())) {
            spec.real_blocks.push_back({b.at("lambda").get<double>(), b.at("ell").get<int>()});
        }
        for (const auto& b : j.value("complex_blocks", ordered_json::array())) {
            spec.complex_blocks.push_back(
                {b.at("a").get<double>(), b.at("b").get<double>(), b.at("ell").get<int>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed spectrum spec JSON: ") + e.what());
    }
    spec.validate();
    return spec;
}

ordered_json inertia_to_json(const Inertia& inertia) {
    return {{"p", inertia.p}, {"n", inertia.n}, {"z", inertia.z}};
}

ordered_json factorization_to_json(const SymFactorization& fact) {
    ordered_json j;
    j["schema"] = "v1";
    j["path"] = to_string(fact.path);
    j["inertia_T"] = inertia_to_json(fact.inertia_T);
    j["inertia_W"] = inertia_to_json(fact.inertia_W);
    j["reconstruction_residual"] = fact.reconstruction_residual;
    j["symmetry_residual_T"] = fact.symmetry_residuals.first;
    j["symmetry_residual_W"] = fact.symmetry_residuals.second;
    return j;
}

ordered_json certificate_to_json(const Certificate& cert) {
    ordered_json j;
    j["schema"] = "v1";
    j["m"] = cert.m;
    j["s"] = cert.s;
    j["nonreal_count"] = cert.nonreal_count;
    j["inertia_T"] = inertia_to_json(cert.inertia_T);
    j["inertia_W"] = inertia_to_json(cert.inertia_W);
    j["bounds"] = {{"lower", {{"numerator", cert.twice_lower}, {"denominator", 2}}},
                   {"upper", {{"numerator", cert.twice_upper}, {"denominator", 2}}}};
    j["checks"] = ordered_json::array();
    for (const auto& c : cert.checks) {
        j["checks"].push_back({{"name", c.name},
                               {"applicable", c.applicable},
                               {"pass", c.pass},
                               {"details", c.details}});
    }
    j["residuals"] = {{"reconstruction", cert.reconstruction_residual},
                      {"symmetry_T", cert.symmetry_residual_T},
                      {"symmetry_W", cert.symmetry_residual_W}};
    j["indeterminate"] = cert.indeterminate;
    j["pass"] = cert.overall_pass();
    return j;
}

ordered_json scan_to_json(const PencilScan& scan) {
    ordered_json j;
    j["schema"] = "v1";
    j["kind"] = (scan.kind == PencilKind::V) ? "V" : "U";
    j["grid_points"] = scan.grid.size();
    j["singular_points"] = ordered_json::array();
    for (const auto& sp : scan.singular_points) {
        j["singular_points"].push_back({{"param", sp.param},
                                        {"multiplicity", sp.multiplicity},
                                        {"mapped_eigenvalue", sp.mapped_eigenvalue}});
    }
    j["touch_params"] = scan.touch_params;
    j["negative_found"] = scan.negative_found;
    j["positive_found"] = scan.positive_found;
    return j;
}

std::string scan_to_csv(const PencilScan& scan) {
    std::ostringstream out;
    const std::size_t m = scan.trajectories.empty() ? 0 : scan.trajectories.front().size();
    out << "param";
    for (std::size_t k = 0; k < m; ++k) out << ",eig_" << (k + 1);
    out << "\n";
    for (std::size_t i = 0; i < scan.grid.size(); ++i) {
        out << format_double(scan.grid[i]);
        for (std::size_t k = 0; k < m; ++k) out << "," << format_double(scan.trajectories[i][k]);
        out << "\n";
    }
    return out.str();
}

ordered_json census_to_json(const InertiaCensus& census, const SymmetrizerBasis& basis,
                            const CensusBoundsReport& report) {
    ordered_json j;
    j["schema"] = "v1";
    j["space_dim"] = basis.space_dim;
    j["samples"] = census.samples;
    j["singular_rejections"] = census.singular_rejections;
    ordered_json hist = ordered_json::object();
    for (const auto& [key, count] : census.observed) {
        const auto [p, n, z] = key;
        hist["(" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(z) + ")"] =
            count;
    }
    j["observed"] = hist;
    j["bounds"] = {{"s", report.s},
                   {"twice_lower", report.twice_lower},
                   {"twice_upper", report.twice_upper},
                   {"observed_min_p", report.observed_min_p},
                   {"observed_max_p", report.observed_max_p},
                   {"all_within_bounds", report.all_within_bounds}};
    return j;
}

} // namespace symfact
