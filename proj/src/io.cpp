#include "poolstat/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "poolstat/errors.hpp"

namespace poolstat {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& text, const std::string& where) {
    const std::string t = trim(text);
    if (t.empty()) throw data_error(where + ": empty number");
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size()) throw data_error(where + ": bad number '" + t + "'");
    return v;
}

long parse_long(const std::string& text, const std::string& where) {
    const std::string t = trim(text);
    char* end = nullptr;
    const long v = std::strtol(t.c_str(), &end, 10);
    if (t.empty() || end != t.c_str() + t.size()) {
        throw data_error(where + ": bad integer '" + t + "'");
    }
    return v;
}

std::vector<double> parse_double_list(const std::string& text, const std::string& where) {
    std::vector<double> out;
    for (const std::string& item : split(text, ',')) out.push_back(parse_double(item, where));
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_dataset(std::ostream& os, const IntervalDataset& ds,
                   const std::vector<double>* truths) {
    if (truths != nullptr && truths->size() != ds.size()) {
        throw data_error("write_dataset: truth column size mismatch");
    }
    os << "# label: " << ds.label << "\n";
    os << (truths != nullptr ? "lo,hi,truth" : "lo,hi") << "\n";
    for (std::size_t i = 0; i < ds.size(); ++i) {
        os << format_double(ds.items[i].lo) << "," << format_double(ds.items[i].hi);
        if (truths != nullptr) os << "," << format_double((*truths)[i]);
        os << "\n";
    }
}

IntervalDataset read_dataset(std::istream& is, const std::string& source_name) {
    IntervalDataset ds;
    std::string line;
    long line_no = 0;
    bool header_seen = false;
    bool has_truth = false;
    while (std::getline(is, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            const std::string prefix = "# label:";
            if (t.rfind(prefix, 0) == 0) ds.label = trim(t.substr(prefix.size()));
            continue;
        }
        std::ostringstream where;
        where << source_name << ":" << line_no;
        if (!header_seen) {
            if (t == "lo,hi") {
                has_truth = false;
            } else if (t == "lo,hi,truth") {
                has_truth = true;
            } else {
                throw data_error(where.str() + ": expected header 'lo,hi', got '" + t + "'");
            }
            header_seen = true;
            continue;
        }
        const std::vector<std::string> cols = split(t, ',');
        const std::size_t expected = has_truth ? 3 : 2;
        if (cols.size() != expected) {
            throw data_error(where.str() + ": expected " + std::to_string(expected) +
                             " columns, got " + std::to_string(cols.size()));
        }
        const double lo = parse_double(cols[0], where.str());
        const double hi = parse_double(cols[1], where.str());
        try {
            ds.items.push_back(make_interval(lo, hi));
        } catch (const std::exception& e) {
            throw data_error(where.str() + ": " + e.what());
        }
    }
    if (!header_seen) throw data_error(source_name + ": missing 'lo,hi' header");
    return ds;
}

IntervalDataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open dataset file '" + path + "'");
    return read_dataset(in, path);
}

void save_dataset(const std::string& path, const IntervalDataset& ds,
                  const std::vector<double>* truths) {
    std::ofstream out(path, std::ios::binary);  // binary: keep LF endings everywhere
    if (!out) throw data_error("cannot write dataset file '" + path + "'");
    write_dataset(out, ds, truths);
}

ScenarioFile parse_scenario(std::istream& is, const std::string& source_name) {
    std::map<std::string, std::string> kv;
    std::vector<std::string> problems;
    std::string line;
    long line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            problems.push_back(source_name + ":" + std::to_string(line_no) +
                               ": expected 'key = value'");
            continue;
        }
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (kv.count(key) != 0) {
            problems.push_back("duplicate key '" + key + "'");
            continue;
        }
        kv[key] = value;
    }

    static const std::vector<std::string> known = {
        "family", "params", "n_skinny",        "n_puffy", "delta_skinny",
        "f",      "f_grid", "alpha",           "metric",  "intervalization",
        "C",      "M",      "seed",            "slices",  "p0",
        "disp_grid"};
    for (const auto& [key, value] : kv) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            problems.push_back("unknown key '" + key + "'");
        }
    }

    auto required = [&](const std::string& key) -> std::optional<std::string> {
        const auto it = kv.find(key);
        if (it == kv.end()) {
            problems.push_back("missing key '" + key + "'");
            return std::nullopt;
        }
        return it->second;
    };

    ScenarioFile out;
    Scenario& sc = out.scenario;

    if (const auto family = required("family")) {
        std::vector<double> params;
        if (const auto ptext = required("params")) {
            try {
                params = parse_double_list(*ptext, "params");
            } catch (const std::exception& e) {
                problems.emplace_back(e.what());
            }
        }
        auto want = [&](std::size_t n) {
            if (params.size() != n) {
                problems.push_back("family '" + *family + "' takes " + std::to_string(n) +
                                   " params, got " + std::to_string(params.size()));
                return false;
            }
            return true;
        };
        if (*family == "normal") {
            if (want(2)) sc.source = NormalParams{params[0], params[1]};
        } else if (*family == "uniform") {
            if (want(2)) sc.source = UniformParams{params[0], params[1]};
        } else if (*family == "exponential") {
            if (want(1)) sc.source = ExponentialParams{params[0]};
        } else if (*family == "gamma") {
            if (want(2)) sc.source = GammaParams{params[0], params[1]};
        } else if (*family == "normal_mixture") {
            if (want(6)) {
                sc.source = NormalMixtureParams{params[0],
                                                params[1],
                                                static_cast<long>(params[2]),
                                                params[3],
                                                params[4],
                                                static_cast<long>(params[5])};
            }
        } else {
            problems.push_back("unknown family '" + *family + "'");
        }
    }

    auto take_long = [&](const std::string& key, long& dst) {
        if (const auto v = required(key)) {
            try {
                dst = parse_long(*v, key);
            } catch (const std::exception& e) {
                problems.emplace_back(e.what());
            }
        }
    };
    auto take_double = [&](const std::string& key, double& dst) {
        if (const auto v = required(key)) {
            try {
                dst = parse_double(*v, key);
            } catch (const std::exception& e) {
                problems.emplace_back(e.what());
            }
        }
    };

    take_long("n_skinny", sc.n_skinny);
    take_long("n_puffy", sc.n_puffy);
    take_double("delta_skinny", sc.delta_skinny);
    take_long("M", sc.replications);
    if (const auto v = required("seed")) {
        try {
            sc.master_seed = static_cast<std::uint64_t>(std::stoull(*v));
        } catch (const std::exception&) {
            problems.push_back("seed: bad integer '" + *v + "'");
        }
    }
    if (const auto v = required("alpha")) {
        try {
            sc.alpha = Alpha(parse_double(*v, "alpha"));
        } catch (const std::exception& e) {
            problems.emplace_back(e.what());
        }
    }

    if (kv.count("f") != 0 && kv.count("f_grid") != 0) {
        problems.emplace_back("give either 'f' or 'f_grid', not both");
    } else if (kv.count("f_grid") != 0) {
        try {
            out.f_grid = parse_double_list(kv["f_grid"], "f_grid");
            if (!out.f_grid.empty()) sc.f = out.f_grid.front();
        } catch (const std::exception& e) {
            problems.emplace_back(e.what());
        }
    } else if (kv.count("f") != 0) {
        try {
            sc.f = parse_double(kv["f"], "f");
        } catch (const std::exception& e) {
            problems.emplace_back(e.what());
        }
    } else {
        problems.emplace_back("missing key 'f' or 'f_grid'");
    }

    if (const auto v = required("metric")) {
        if (*v == "outer_ci_width") {
            sc.metric = Metric::outer_ci_width;
        } else if (*v == "ks_horizontal_width") {
            sc.metric = Metric::ks_horizontal_width;
        } else if (*v == "mle_ci_width_exponential") {
            sc.metric = Metric::mle_ci_width_exponential;
        } else if (*v == "mle_ci_width_uniform") {
            sc.metric = Metric::mle_ci_width_uniform;
        } else if (*v == "mle_traditional_study") {
            sc.metric = Metric::mle_traditional_study;
        } else {
            problems.push_back("unknown metric '" + *v + "'");
        }
    }

    if (kv.count("intervalization") != 0) {
        const std::string& v = kv["intervalization"];
        if (v == "central") {
            sc.intervalization = Intervalization::central;
        } else if (v == "uniform_bias") {
            sc.intervalization = Intervalization::uniform_bias;
        } else if (v == "systematic") {
            sc.intervalization = Intervalization::systematic;
        } else {
            problems.push_back("unknown intervalization '" + v + "'");
        }
    }
    if (sc.intervalization == Intervalization::systematic) {
        if (kv.count("C") == 0) {
            problems.emplace_back("systematic intervalization requires key 'C'");
        } else {
            try {
                sc.systematic_c = parse_double(kv["C"], "C");
            } catch (const std::exception& e) {
                problems.emplace_back(e.what());
            }
        }
    } else if (kv.count("C") != 0) {
        problems.emplace_back("key 'C' is only valid with systematic intervalization");
    }

    if (kv.count("slices") != 0) {
        try {
            sc.slices = parse_long(kv["slices"], "slices");
        } catch (const std::exception& e) {
            problems.emplace_back(e.what());
        }
    }
    if (kv.count("p0") != 0) {
        try {
            sc.p0 = parse_double(kv["p0"], "p0");
        } catch (const std::exception& e) {
            problems.emplace_back(e.what());
        }
    }
    if (kv.count("disp_grid") != 0) {
        try {
            out.dispersion_grid = parse_double_list(kv["disp_grid"], "disp_grid");
        } catch (const std::exception& e) {
            problems.emplace_back(e.what());
        }
    }

    if (problems.empty()) {
        try {
            validate(sc);
        } catch (const std::exception& e) {
            problems.emplace_back(e.what());
        }
    }
    if (!problems.empty()) {
        std::ostringstream msg;
        msg << source_name << ": invalid scenario file:";
        for (const std::string& p : problems) msg << "\n  - " << p;
        throw data_error(msg.str());
    }
    return out;
}

ScenarioFile load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open scenario file '" + path + "'");
    return parse_scenario(in, path);
}

void write_step_function_csv(std::ostream& os, const StepFunction& f) {
    os << "x,p\n";
    for (std::size_t i = 0; i < f.jump_points().size(); ++i) {
        os << format_double(f.jump_points()[i]) << "," << format_double(f.values()[i]) << "\n";
    }
}

void write_band_csv(std::ostream& os, const PBox& pb, const KSBand& band) {
    std::vector<double> xs = pb.upper.jump_points();
    xs.insert(xs.end(), pb.lower.jump_points().begin(), pb.lower.jump_points().end());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    os << "x,B_lower,F_lower,F_upper,B_upper\n";
    for (double x : xs) {
        os << format_double(x) << "," << format_double(band.lower(x)) << ","
           << format_double(pb.lower(x)) << "," << format_double(pb.upper(x)) << ","
           << format_double(band.upper(x)) << "\n";
    }
}

void write_curve_csv(std::ostream& os, const Curve& curve) {
    os << "f,percent\n";
    for (const CurvePoint& pt : curve) {
        os << format_double(pt.f) << "," << format_double(pt.percent_success) << "\n";
    }
}

void write_grid_csv(std::ostream& os, const ContourGrid& grid) {
    os << "f,disp,percent,iso90\n";
    for (std::size_t i = 0; i < grid.dispersion_values.size(); ++i) {
        for (std::size_t j = 0; j < grid.f_values.size(); ++j) {
            const bool iso =
                std::find(grid.iso90_cells.begin(), grid.iso90_cells.end(),
                          std::make_pair(i, j)) != grid.iso90_cells.end();
            os << format_double(grid.f_values[j]) << ","
               << format_double(grid.dispersion_values[i]) << ","
               << format_double(grid.percent[i][j]) << "," << (iso ? 1 : 0) << "\n";
        }
    }
}

void write_study_csv(std::ostream& os, const Scenario& sc, const StudyResult& study) {
    os << "f,n_skinny,n_puffy,mean_rate_skinny,mean_rate_pooled,trials\n";
    os << format_double(sc.f) << "," << sc.n_skinny << "," << sc.n_puffy << ","
       << format_double(study.mean_rate_skinny) << "," << format_double(study.mean_rate_pooled)
       << "," << study.trials << "\n";
}

void write_study_histogram_csv(std::ostream& os, const StudyResult& study) {
    os << "bin_lo,bin_hi,count_skinny,count_pooled\n";
    for (std::size_t b = 0; b + 1 < study.bin_edges.size(); ++b) {
        os << format_double(study.bin_edges[b]) << "," << format_double(study.bin_edges[b + 1])
           << "," << study.hist_skinny[b] << "," << study.hist_pooled[b] << "\n";
    }
}

}  // namespace poolstat
