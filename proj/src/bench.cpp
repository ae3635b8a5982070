#include "qwmvc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "qwmvc/errors.hpp"
#include "qwmvc/generators.hpp"
#include "qwmvc/rng.hpp"
#include "qwmvc/version.hpp"
#include "qwmvc/wl.hpp"

namespace qwmvc {

const char* family_name(Family f) {
    switch (f) {
        case Family::er:
            return "ER";
        case Family::ba:
            return "BA";
        case Family::reg:
            return "REG";
    }
    return "?";
}

namespace {

int family_rank(Family f) { return static_cast<int>(f); }

int solver_rank(const std::string& id) {
    const auto& ids = canonical_solvers();
    const auto it = std::find(ids.begin(), ids.end(), id);
    return it == ids.end() ? static_cast<int>(ids.size()) : static_cast<int>(it - ids.begin());
}

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

std::uint64_t instance_seed(std::uint64_t base, Family family, int n, std::uint64_t param_bits, int index) {
    std::uint64_t h = mix64(base);
    h = mix64(h ^ static_cast<std::uint64_t>(family_rank(family)));
    h = mix64(h ^ static_cast<std::uint64_t>(n));
    h = mix64(h ^ param_bits);
    h = mix64(h ^ static_cast<std::uint64_t>(index));
    return h;
}

std::uint64_t param_bits_of(double param) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(param));
    std::memcpy(&bits, &param, sizeof(bits));
    return bits;
}

std::uint64_t solver_stream(std::uint64_t iseed, const std::string& solver) {
    return mix64(iseed ^ fnv1a64(solver.data(), solver.size()));
}

/// Nearest even integer to p*(n-1), clamped to a feasible WS ring degree.
int ws_ring_degree(int n, double p) {
    const int k = 2 * static_cast<int>(std::llround(p * (n - 1) / 2.0));
    int cap = n - 1;
    if (cap % 2 != 0) {
        --cap;
    }
    return std::clamp(k, 2, std::max(2, cap));
}

struct InstanceTask {
    Family family;
    int n;
    double param;
    std::uint64_t seed;  // instance seed (recorded)
    bool substituted;
    Graph graph;
};

}  // namespace

void EnsembleConfig::validate() const {
    if (families.empty()) {
        throw std::invalid_argument("config: families must be non-empty");
    }
    if (n_values.empty()) {
        throw std::invalid_argument("config: n must be non-empty");
    }
    for (int n : n_values) {
        if (n < 1 || n > 2000) {
            throw std::invalid_argument("config: n out of generator capacity [1, 2000]");
        }
    }
    if (instances_per_config < 1) {
        throw std::invalid_argument("config: instances_per_config must be >= 1");
    }
    if (reg_instances < 1) {
        throw std::invalid_argument("config: reg.instances must be >= 1");
    }
    for (double p : er_p) {
        if (!(p > 0.0) || p > 1.0) {
            throw std::invalid_argument("config: er.p values must be in (0, 1]");
        }
    }
    for (int m : ba_m) {
        if (m < 1) {
            throw std::invalid_argument("config: ba.m values must be >= 1");
        }
    }
    if (exact_budget < 1) {
        throw std::invalid_argument("config: exact.budget must be >= 1");
    }
    if (solvers.empty()) {
        throw std::invalid_argument("config: solvers must be non-empty");
    }
    for (const auto& s : solvers) {
        if (solver_rank(s) >= static_cast<int>(canonical_solvers().size())) {
            throw std::invalid_argument("config: unknown solver '" + s + "'");
        }
    }
    if (!(sa.cooling > 0.0 && sa.cooling < 1.0) || !(sa.penalty_lambda > 1.0) ||
        !(sa.initial_temp > 0.0) || !(sa.min_temp > 0.0)) {
        throw std::invalid_argument("config: sa parameters out of range");
    }
    if (fastvc.bms_k < 1) {
        throw std::invalid_argument("config: fastvc.bms_k must be >= 1");
    }
}

std::vector<int> regular_degree_grid(int n) {
    std::vector<int> grid;
    for (double target : {2.0, 0.25 * n, 0.5 * n}) {
        int k = static_cast<int>(std::llround(target));
        if ((static_cast<long long>(n) * k) % 2 != 0) {
            ++k;
        }
        k = std::clamp(k, 2, n - 1);
        if ((static_cast<long long>(n) * k) % 2 != 0) {
            --k;  // n odd and the clamp landed on odd k
        }
        if (k >= 2 && k < n) {
            grid.push_back(k);
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

namespace {

/// Materializes all instances sequentially (generation is cheap and the REG
/// dedup needs shared state); solving is what gets parallelized.
std::vector<InstanceTask> build_instances(const EnsembleConfig& config, RunStats& stats) {
    std::vector<InstanceTask> tasks;
    for (Family family : config.families) {
        for (int n : config.n_values) {
            switch (family) {
                case Family::er: {
                    for (double p : config.er_p) {
                        for (int i = 0; i < config.instances_per_config; ++i) {
                            const std::uint64_t seed =
                                instance_seed(config.seed_base, family, n, param_bits_of(p), i);
                            Graph g = generate_er(n, p, seed);
                            bool substituted = false;
                            if (!is_connected(g)) {
                                // Watts-Strogatz stand-in of comparable density
                                try {
                                    g = generate_ws(n, ws_ring_degree(n, p), 0.1,
                                                    mix64(seed ^ 0x77730001ULL));
                                    substituted = true;
                                    ++stats.substituted_instances;
                                } catch (const generation_error&) {
                                    ++stats.generation_failures;
                                    continue;
                                }
                            }
                            tasks.push_back({family, n, p, seed, substituted, std::move(g)});
                        }
                    }
                    break;
                }
                case Family::ba: {
                    for (int m : config.ba_m) {
                        if (m + 1 >= n) {
                            continue;  // infeasible configuration, not an instance failure
                        }
                        for (int i = 0; i < config.instances_per_config; ++i) {
                            const std::uint64_t seed = instance_seed(
                                config.seed_base, family, n, static_cast<std::uint64_t>(m), i);
                            tasks.push_back(
                                {family, n, static_cast<double>(m), seed, false, generate_ba(n, m, seed)});
                        }
                    }
                    break;
                }
                case Family::reg: {
                    for (int k : regular_degree_grid(n)) {
                        std::set<std::string> hashes;
                        int achieved = 0;
                        const int attempt_budget = 100;
                        for (int attempt = 0; attempt < attempt_budget && achieved < config.reg_instances;
                             ++attempt) {
                            const std::uint64_t seed = instance_seed(
                                config.seed_base, family, n, static_cast<std::uint64_t>(k), attempt);
                            Graph g;
                            try {
                                g = generate_regular(n, k, seed);
                            } catch (const generation_error&) {
                                ++stats.generation_failures;
                                continue;
                            }
                            if (!is_connected(g)) {
                                continue;
                            }
                            if (!hashes.insert(wl_hash(g)).second) {
                                continue;  // non-isomorphism filter (WL, as far as it can tell)
                            }
                            tasks.push_back({family, n, static_cast<double>(k), seed, false, std::move(g)});
                            ++achieved;
                        }
                        stats.reg_achieved[{n, k}] = achieved;
                    }
                    break;
                }
            }
        }
    }
    return tasks;
}

std::vector<RatioRecord> solve_instance(const InstanceTask& task, const EnsembleConfig& config) {
    const ExactResult exact = bnb_mvc(task.graph, config.exact_budget);
    if (!validate_cover(task.graph, exact.cover)) {
        throw std::logic_error("bench: exact solver produced an invalid cover");
    }
    std::vector<RatioRecord> records;
    records.reserve(config.solvers.size());
    for (const auto& solver : config.solvers) {
        CoverResult r;
        if (solver == "quantum") {
            QuantumParams qp;
            qp.time_mode = config.fixed_time ? TimeMode::fixed : TimeMode::topt_active;
            qp.fixed_time = 0.01;
            r = quantum_mvc(task.graph, qp);
        } else if (solver == "fastvc") {
            FastVcParams fp = config.fastvc;
            fp.seed = solver_stream(task.seed, solver);
            r = fastvc_mvc(task.graph, fp);
        } else if (solver == "sa") {
            SaParams sp = config.sa;
            sp.seed = solver_stream(task.seed, solver);
            r = sa_mvc(task.graph, sp);
        } else if (solver == "2approx") {
            r = two_approx_mvc(task.graph, solver_stream(task.seed, solver));
        } else {
            throw std::invalid_argument("bench: unknown solver '" + solver + "'");
        }
        if (!r.valid || !validate_cover(task.graph, r.cover)) {
            throw std::logic_error("bench: solver '" + solver + "' produced an invalid cover");
        }
        records.push_back({task.family, task.n, task.param, task.seed, task.substituted, solver,
                           r.size(), exact.size, exact.proven_optimal,
                           exact.size > 0 ? static_cast<double>(r.size()) / exact.size
                                          : (r.size() == 0 ? 1.0 : 0.0),
                           r.wall_time_s});
    }
    return records;
}

}  // namespace

RunResult run_ensemble(const EnsembleConfig& config, int threads) {
    config.validate();
    RunResult out;
    std::vector<InstanceTask> tasks = build_instances(config, out.stats);

    if (threads <= 0) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads <= 0) {
            threads = 1;
        }
    }
    threads = std::min(threads, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));

    // each task writes into its own slot, so scheduling cannot reorder output
    std::vector<std::vector<RatioRecord>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) {
                return;
            }
            try {
                slots[i] = solve_instance(tasks[i], config);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }

    for (auto& slot : slots) {
        for (auto& rec : slot) {
            if (!rec.proven_optimal) {
                ++out.stats.excluded_records;
            }
            out.records.push_back(std::move(rec));
        }
    }
    std::set<std::pair<Family, std::uint64_t>> unproven;
    for (const auto& rec : out.records) {
        if (!rec.proven_optimal) {
            unproven.insert({rec.family, rec.seed});
        }
    }
    out.stats.unproven_instances = static_cast<long long>(unproven.size());
    return out;
}

namespace {

struct GroupKey {
    int family_rank;
    int solver_rank;
    int n;  // -1 for family-level

    bool operator<(const GroupKey& o) const {
        return std::tie(family_rank, solver_rank, n) < std::tie(o.family_rank, o.solver_rank, o.n);
    }
};

AggregateResult aggregate(const std::vector<RatioRecord>& records, bool by_n) {
    struct Acc {
        Family family;
        std::string solver;
        std::vector<double> ratios;
        int excluded = 0;
    };
    std::map<GroupKey, Acc> groups;
    for (const auto& rec : records) {
        const GroupKey key{family_rank(rec.family), solver_rank(rec.solver), by_n ? rec.n : -1};
        auto& acc = groups[key];
        acc.family = rec.family;
        acc.solver = rec.solver;
        if (rec.proven_optimal) {
            acc.ratios.push_back(rec.ratio);
        } else {
            ++acc.excluded;
        }
    }
    AggregateResult out;
    for (const auto& [key, acc] : groups) {
        out.excluded_total += acc.excluded;
        if (acc.ratios.empty()) {
            continue;  // whole group unproven: no row
        }
        double mean = 0.0;
        for (double r : acc.ratios) {
            mean += r;
        }
        mean /= static_cast<double>(acc.ratios.size());
        double var = 0.0;
        for (double r : acc.ratios) {
            var += (r - mean) * (r - mean);
        }
        var /= static_cast<double>(acc.ratios.size());
        out.rows.push_back({acc.family, acc.solver, key.n, mean, std::sqrt(var),
                            static_cast<int>(acc.ratios.size()), acc.excluded});
    }
    return out;
}

}  // namespace

AggregateResult aggregate_by_family(const std::vector<RatioRecord>& records) {
    if (records.empty()) {
        throw std::invalid_argument("aggregate: no records");
    }
    return aggregate(records, false);
}

AggregateResult aggregate_by_family_n(const std::vector<RatioRecord>& records) {
    if (records.empty()) {
        throw std::invalid_argument("aggregate: no records");
    }
    return aggregate(records, true);
}

std::string records_csv(const std::vector<RatioRecord>& records) {
    std::ostringstream out;
    out << "family,n,param,seed,substituted,solver,cover_size,exact_size,proven_optimal,ratio\n";
    for (const auto& r : records) {
        out << family_name(r.family) << ',' << r.n << ',' << fixed6(r.param) << ',' << r.seed << ','
            << (r.substituted ? 1 : 0) << ',' << r.solver << ',' << r.cover_size << ',' << r.exact_size
            << ',' << (r.proven_optimal ? 1 : 0) << ',' << fixed6(r.ratio) << '\n';
    }
    return out.str();
}

std::string heatmap_csv(const AggregateResult& by_family, const std::vector<std::string>& solvers) {
    std::vector<Family> families = {Family::er, Family::ba, Family::reg};
    std::ostringstream out;
    out << "solver";
    for (Family f : families) {
        out << ',' << family_name(f);
    }
    out << '\n';
    for (const auto& solver : solvers) {
        out << solver;
        for (Family f : families) {
            out << ',';
            for (const auto& row : by_family.rows) {
                if (row.family == f && row.solver == solver && row.n == -1) {
                    out << fixed6(row.mean);
                    break;
                }
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string curves_csv(const AggregateResult& by_family_n) {
    std::ostringstream out;
    out << "family,solver,n,mean_ratio,std_ratio,count,excluded\n";
    std::vector<SummaryRow> rows = by_family_n.rows;
    std::stable_sort(rows.begin(), rows.end(), [](const SummaryRow& a, const SummaryRow& b) {
        return std::tuple(family_rank(a.family), solver_rank(a.solver), a.n) <
               std::tuple(family_rank(b.family), solver_rank(b.solver), b.n);
    });
    for (const auto& row : rows) {
        out << family_name(row.family) << ',' << row.solver << ',' << row.n << ',' << fixed6(row.mean)
            << ',' << fixed6(row.stddev) << ',' << row.count << ',' << row.excluded << '\n';
    }
    return out.str();
}

std::string run_meta_text(const EnsembleConfig& config, const RunStats& stats, long long record_count) {
    std::ostringstream out;
    out << "qwmvc bench run\n";
    out << "version=" << kVersion << "\n";
    out << "[config]\n" << config_echo(config);
    out << "[stats]\n";
    out << "records=" << record_count << '\n';
    out << "substituted_instances=" << stats.substituted_instances << '\n';
    out << "unproven_instances=" << stats.unproven_instances << '\n';
    out << "excluded_records=" << stats.excluded_records << '\n';
    out << "generation_failures=" << stats.generation_failures << '\n';
    for (const auto& [key, achieved] : stats.reg_achieved) {
        out << "reg_achieved n=" << key.first << " k=" << key.second << " count=" << achieved << '\n';
    }
    return out.str();
}

namespace {

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::string item;
    std::istringstream in(value);
    while (std::getline(in, item, ',')) {
        const auto begin = item.find_first_not_of(" \t");
        if (begin == std::string::npos) {
            continue;
        }
        const auto end = item.find_last_not_of(" \t");
        items.push_back(item.substr(begin, end - begin + 1));
    }
    return items;
}

long long to_int(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) {
            throw std::invalid_argument("");
        }
        return v;
    } catch (...) {
        throw std::invalid_argument("config: bad integer for '" + key + "': " + s);
    }
}

double to_real(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) {
            throw std::invalid_argument("");
        }
        return v;
    } catch (...) {
        throw std::invalid_argument("config: bad number for '" + key + "': " + s);
    }
}

/// n accepts "lo:hi:step" or an explicit comma list.
std::vector<int> parse_n_values(const std::string& value) {
    std::vector<int> ns;
    if (value.find(':') != std::string::npos) {
        std::istringstream in(value);
        std::string lo, hi, step;
        std::getline(in, lo, ':');
        std::getline(in, hi, ':');
        std::getline(in, step);
        const long long a = to_int(lo, "n"), b = to_int(hi, "n"), s = step.empty() ? 1 : to_int(step, "n");
        if (s < 1 || b < a) {
            throw std::invalid_argument("config: bad n range '" + value + "'");
        }
        for (long long v = a; v <= b; v += s) {
            ns.push_back(static_cast<int>(v));
        }
    } else {
        for (const auto& item : split_list(value)) {
            ns.push_back(static_cast<int>(to_int(item, "n")));
        }
    }
    return ns;
}

}  // namespace

EnsembleConfig parse_config(std::istream& in, const std::string& source_name) {
    EnsembleConfig config;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw parse_error(source_name, line_no, "expected 'key = value'");
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) {
                return std::string();
            }
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "families") {
                config.families.clear();
                for (const auto& item : split_list(value)) {
                    if (item == "er" || item == "ER") {
                        config.families.push_back(Family::er);
                    } else if (item == "ba" || item == "BA") {
                        config.families.push_back(Family::ba);
                    } else if (item == "reg" || item == "REG") {
                        config.families.push_back(Family::reg);
                    } else {
                        throw std::invalid_argument("config: unknown family '" + item + "'");
                    }
                }
            } else if (key == "n") {
                config.n_values = parse_n_values(value);
            } else if (key == "er.p") {
                config.er_p.clear();
                for (const auto& item : split_list(value)) {
                    config.er_p.push_back(to_real(item, key));
                }
            } else if (key == "ba.m") {
                config.ba_m.clear();
                for (const auto& item : split_list(value)) {
                    config.ba_m.push_back(static_cast<int>(to_int(item, key)));
                }
            } else if (key == "instances_per_config") {
                config.instances_per_config = static_cast<int>(to_int(value, key));
            } else if (key == "reg.instances") {
                config.reg_instances = static_cast<int>(to_int(value, key));
            } else if (key == "seed_base") {
                config.seed_base = static_cast<std::uint64_t>(to_int(value, key));
            } else if (key == "solvers") {
                config.solvers = split_list(value);
            } else if (key == "time_mode") {
                if (value == "topt") {
                    config.fixed_time = false;
                } else if (value == "fixed001") {
                    config.fixed_time = true;
                } else {
                    throw std::invalid_argument("config: time_mode must be topt or fixed001");
                }
            } else if (key == "exact.budget") {
                config.exact_budget = to_int(value, key);
            } else if (key == "sa.initial_temp") {
                config.sa.initial_temp = to_real(value, key);
            } else if (key == "sa.cooling") {
                config.sa.cooling = to_real(value, key);
            } else if (key == "sa.steps_per_temp") {
                config.sa.steps_per_temp = to_int(value, key);
            } else if (key == "sa.min_temp") {
                config.sa.min_temp = to_real(value, key);
            } else if (key == "sa.penalty_lambda") {
                config.sa.penalty_lambda = to_real(value, key);
            } else if (key == "fastvc.cutoff_iters") {
                config.fastvc.cutoff_iters = to_int(value, key);
            } else if (key == "fastvc.bms_k") {
                config.fastvc.bms_k = static_cast<int>(to_int(value, key));
            } else {
                throw std::invalid_argument("config: unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw parse_error(source_name, line_no, e.what());
        }
    }
    config.validate();
    return config;
}

EnsembleConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw parse_error(path, 0, "cannot open file");
    }
    return parse_config(in, path);
}

std::string config_echo(const EnsembleConfig& config) {
    std::ostringstream out;
    out << "families = ";
    for (std::size_t i = 0; i < config.families.size(); ++i) {
        out << (i ? ", " : "") << (config.families[i] == Family::er
                                       ? "er"
                                       : config.families[i] == Family::ba ? "ba" : "reg");
    }
    out << "\nn = ";
    for (std::size_t i = 0; i < config.n_values.size(); ++i) {
        out << (i ? ", " : "") << config.n_values[i];
    }
    out << "\ner.p = ";
    for (std::size_t i = 0; i < config.er_p.size(); ++i) {
        out << (i ? ", " : "") << fixed6(config.er_p[i]);
    }
    out << "\nba.m = ";
    for (std::size_t i = 0; i < config.ba_m.size(); ++i) {
        out << (i ? ", " : "") << config.ba_m[i];
    }
    out << "\ninstances_per_config = " << config.instances_per_config;
    out << "\nreg.instances = " << config.reg_instances;
    out << "\nseed_base = " << config.seed_base;
    out << "\nsolvers = ";
    for (std::size_t i = 0; i < config.solvers.size(); ++i) {
        out << (i ? ", " : "") << config.solvers[i];
    }
    out << "\ntime_mode = " << (config.fixed_time ? "fixed001" : "topt");
    out << "\nexact.budget = " << config.exact_budget;
    out << "\nsa.initial_temp = " << fixed6(config.sa.initial_temp);
    out << "\nsa.cooling = " << fixed6(config.sa.cooling);
    out << "\nsa.steps_per_temp = " << config.sa.steps_per_temp;
    out << "\nsa.min_temp = " << fixed6(config.sa.min_temp);
    out << "\nsa.penalty_lambda = " << fixed6(config.sa.penalty_lambda);
    out << "\nfastvc.cutoff_iters = " << config.fastvc.cutoff_iters;
    out << "\nfastvc.bms_k = " << config.fastvc.bms_k << '\n';
    return out.str();
}

}  // namespace qwmvc
