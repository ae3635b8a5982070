#include "qwmvc/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "qwmvc/errors.hpp"

namespace qwmvc {

namespace {

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

}  // namespace

SolveReport make_report(const CoverResult& r) {
    SolveReport out;
    out.solver = r.solver;
    out.cover = r.cover;
    out.valid = r.valid;
    out.iterations = r.iterations;
    out.wall_time_s = r.wall_time_s;
    out.trace = r.trace;
    return out;
}

SolveReport make_report(const ExactResult& r) {
    SolveReport out;
    out.solver = "exact";
    out.cover = r.cover;
    out.valid = true;
    out.iterations = 0;
    out.wall_time_s = r.wall_time_s;
    out.proven_optimal = r.proven_optimal;
    out.nodes_explored = r.nodes_explored;
    return out;
}

std::string solve_report_text(const SolveReport& r, bool with_trace) {
    std::ostringstream out;
    out << "solver=" << r.solver << " size=" << r.cover.size() << " cover=[";
    for (std::size_t i = 0; i < r.cover.size(); ++i) {
        out << (i ? "," : "") << r.cover[i];
    }
    out << "] valid=" << (r.valid ? "true" : "false");
    if (r.proven_optimal) {
        out << " proven_optimal=" << (*r.proven_optimal ? "true" : "false");
        out << " nodes=" << *r.nodes_explored;
    }
    out << " wall_time_s=" << fixed6(r.wall_time_s) << '\n';
    if (with_trace) {
        int iter = 0;
        for (const auto& e : r.trace) {
            out << "iter=" << ++iter << " vertex=" << e.vertex << " score=" << fixed6(e.score)
                << " remaining_edges=" << e.remaining_edges << " t=" << fixed6(e.time) << '\n';
        }
    }
    return out.str();
}

std::string solve_report_json(const SolveReport& r, bool with_trace) {
    nlohmann::json j;
    j["solver"] = r.solver;
    j["size"] = r.cover.size();
    j["cover"] = r.cover;
    j["valid"] = r.valid;
    j["iterations"] = r.iterations;
    j["wall_time_s"] = r.wall_time_s;
    if (r.proven_optimal) {
        j["proven_optimal"] = *r.proven_optimal;
        j["nodes_explored"] = *r.nodes_explored;
    }
    if (with_trace) {
        nlohmann::json trace = nlohmann::json::array();
        for (const auto& e : r.trace) {
            trace.push_back({{"vertex", e.vertex},
                             {"score", e.score},
                             {"remaining_edges", e.remaining_edges},
                             {"t", e.time}});
        }
        j["trace"] = std::move(trace);
    }
    return j.dump(2) + "\n";
}

std::string summary_table_text(const AggregateResult& by_family, const AggregateResult& by_family_n) {
    std::ostringstream out;
    out << "family-level mean approximation ratios (proven exact denominators only)\n";
    out << "family solver    mean      std       count excluded\n";
    for (const auto& row : by_family.rows) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%-6s %-9s %-9.6f %-9.6f %-5d %d\n", family_name(row.family),
                      row.solver.c_str(), row.mean, row.stddev, row.count, row.excluded);
        out << buf;
    }
    out << "\nper-size curves\n";
    out << "family solver    n    mean      std       count excluded\n";
    for (const auto& row : by_family_n.rows) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%-6s %-9s %-4d %-9.6f %-9.6f %-5d %d\n", family_name(row.family),
                      row.solver.c_str(), row.n, row.mean, row.stddev, row.count, row.excluded);
        out << buf;
    }
    return out.str();
}

std::string summary_table_json(const AggregateResult& by_family, const AggregateResult& by_family_n) {
    auto rows_json = [](const AggregateResult& agg) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : agg.rows) {
            nlohmann::json j{{"family", family_name(row.family)}, {"solver", row.solver},
                             {"mean", row.mean},                  {"std", row.stddev},
                             {"count", row.count},                {"excluded", row.excluded}};
            if (row.n >= 0) {
                j["n"] = row.n;
            }
            rows.push_back(std::move(j));
        }
        return rows;
    };
    nlohmann::json j;
    j["by_family"] = rows_json(by_family);
    j["by_family_n"] = rows_json(by_family_n);
    return j.dump(2) + "\n";
}

std::vector<RatioRecord> parse_records_csv(std::istream& in, const std::string& source_name) {
    std::vector<RatioRecord> records;
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) {
        throw parse_error(source_name, 1, "empty records file");
    }
    ++line_no;
    if (line != "family,n,param,seed,substituted,solver,cover_size,exact_size,proven_optimal,ratio") {
        throw parse_error(source_name, 1, "unexpected header");
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() != 10) {
            throw parse_error(source_name, line_no, "expected 10 fields");
        }
        RatioRecord r;
        if (fields[0] == "ER") {
            r.family = Family::er;
        } else if (fields[0] == "BA") {
            r.family = Family::ba;
        } else if (fields[0] == "REG") {
            r.family = Family::reg;
        } else {
            throw parse_error(source_name, line_no, "unknown family '" + fields[0] + "'");
        }
        try {
            r.n = std::stoi(fields[1]);
            r.param = std::stod(fields[2]);
            r.seed = std::stoull(fields[3]);
            r.substituted = std::stoi(fields[4]) != 0;
            r.solver = fields[5];
            r.cover_size = std::stoi(fields[6]);
            r.exact_size = std::stoi(fields[7]);
            r.proven_optimal = std::stoi(fields[8]) != 0;
            r.ratio = std::stod(fields[9]);
        } catch (...) {
            throw parse_error(source_name, line_no, "malformed record");
        }
        r.wall_time_s = 0.0;
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace qwmvc
