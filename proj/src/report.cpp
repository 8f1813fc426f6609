#include "deriva/report.hpp"

#include <json.hpp>

#include <atomic>
#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace deriva {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

const char *regime_name(Regime r) { return r == Regime::regular ? "regular" : "modular"; }

const char *status_name(bool pass) { return pass ? "PASS" : "FAIL"; }

std::string cell_label(const FamilySpec &spec) {
    std::ostringstream os;
    os << family_name(spec.family) << " n=" << spec.n << " over "
       << field_label(spec.characteristic);
    return os.str();
}

ordered_json report_json(const VerificationReport &rep) {
    ordered_json j;
    j["spec"] = ordered_json{{"family", family_name(rep.spec.family)},
                             {"n", rep.spec.n},
                             {"characteristic", rep.spec.characteristic},
                             {"order", rep.order},
                             {"regime", regime_name(rep.regime)},
                             {"degenerate", rep.degenerate},
                             {"classes", rep.class_count_computed}};
    j["dims"] = ordered_json{
        {"der", rep.der_computed}, {"inner", rep.inner_computed}, {"outer", rep.outer_computed}};
    ordered_json checks = ordered_json::array();
    for (const CheckResult &c : rep.checks)
        checks.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = std::move(checks);
    j["status"] = status_name(rep.pass);
    j["variant_notes"] = rep.variant_notes;
    return j;
}

const char *sweep_csv_header =
    "family,n,characteristic,regime,order,classes,der,inner,outer,status";

std::string report_csv_row(const VerificationReport &rep) {
    std::ostringstream os;
    os << family_name(rep.spec.family) << ',' << rep.spec.n << ',' << rep.spec.characteristic
       << ',' << regime_name(rep.regime) << ',' << rep.order << ',' << rep.class_count_computed
       << ',' << rep.der_computed << ',' << rep.inner_computed << ',' << rep.outer_computed << ','
       << status_name(rep.pass);
    return os.str();
}

std::string assignment_text(const GeneratorAssignment &asg) {
    return "f(a) = " + element_to_text(asg.images[0]) +
           ", f(b) = " + element_to_text(asg.images[1]);
}

std::string report_text(const VerificationReport &rep) {
    std::ostringstream os;
    os << cell_label(rep.spec) << " (" << regime_name(rep.regime)
       << (rep.degenerate ? ", degenerate" : "") << "), order " << rep.order << ", "
       << rep.class_count_computed << " conjugacy classes\n";
    os << "dims: der " << rep.der_computed << ", inner " << rep.inner_computed << ", outer "
       << rep.outer_computed << "\n";
    os << "status: " << status_name(rep.pass) << "\n";
    os << "checks:\n";
    for (const CheckResult &c : rep.checks)
        os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
    Field f = make_field(rep.spec.characteristic);
    FiniteGroup g = build_group(rep.spec, /*allow_degenerate=*/true);
    std::vector<GeneratorAssignment> basis = family_basis(g, rep.spec.family, f, nullptr);
    if (!basis.empty()) {
        os << "catalogued derivation basis:\n";
        for (const GeneratorAssignment &asg : basis)
            os << "  " << assignment_text(asg) << "\n";
    }
    if (!rep.variant_notes.empty()) {
        os << "notes:\n";
        for (const std::string &n : rep.variant_notes)
            os << "  - " << n << "\n";
    }
    return os.str();
}

}  // namespace

std::optional<OutputFormat> format_from_name(const std::string &name) {
    if (name == "json")
        return OutputFormat::json;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "text")
        return OutputFormat::text;
    return std::nullopt;
}

std::string field_label(unsigned long characteristic) {
    if (characteristic == 0)
        return "Q";
    return "GF(" + std::to_string(characteristic) + ")";
}

DimensionReport compute_dimensions(const FiniteGroup &g, const Field &f, std::string label) {
    DimensionReport rep;
    rep.group_label = std::move(label);
    rep.characteristic = f.characteristic();
    rep.order = g.order();
    rep.classes = conjugacy_classes(g).class_count();
    rep.der = (int)derivation_space(g, f).dimension();
    rep.inner = (int)inner_derivation_space(g, f).basis.dimension();
    rep.outer = rep.der - rep.inner;
    return rep;
}

std::string dimensions_to_string(const DimensionReport &rep, OutputFormat format) {
    switch (format) {
    case OutputFormat::json: {
        ordered_json j{{"group", rep.group_label},
                       {"characteristic", rep.characteristic},
                       {"order", rep.order},
                       {"classes", rep.classes},
                       {"der", rep.der},
                       {"inner", rep.inner},
                       {"outer", rep.outer}};
        return j.dump(2) + "\n";
    }
    case OutputFormat::csv: {
        std::ostringstream os;
        os << "group,characteristic,order,classes,der,inner,outer\n"
           << csv_field(rep.group_label) << ',' << rep.characteristic << ',' << rep.order << ','
           << rep.classes << ',' << rep.der << ',' << rep.inner << ',' << rep.outer << "\n";
        return os.str();
    }
    case OutputFormat::text: {
        std::ostringstream os;
        os << "group " << rep.group_label << " over " << field_label(rep.characteristic)
           << ": order " << rep.order << ", " << rep.classes << " classes; der " << rep.der
           << ", inner " << rep.inner << ", outer " << rep.outer << "\n";
        return os.str();
    }
    }
    return {};
}

std::string classes_to_string(const FiniteGroup &g, OutputFormat format) {
    ConjugacyClasses cc = conjugacy_classes(g);
    switch (format) {
    case OutputFormat::json: {
        ordered_json classes = ordered_json::array();
        for (std::size_t i = 0; i < cc.classes.size(); ++i) {
            ordered_json members = ordered_json::array();
            for (int e : cc.classes[i])
                members.push_back(g.name(e));
            classes.push_back(ordered_json{{"representative", g.name(cc.representatives[i])},
                                           {"size", cc.classes[i].size()},
                                           {"members", std::move(members)}});
        }
        ordered_json j{{"order", g.order()},
                       {"class_count", cc.class_count()},
                       {"central_count", cc.central_count},
                       {"classes", std::move(classes)}};
        return j.dump(2) + "\n";
    }
    case OutputFormat::csv: {
        std::ostringstream os;
        os << "representative,size,members\n";
        for (std::size_t i = 0; i < cc.classes.size(); ++i) {
            std::string members;
            for (int e : cc.classes[i]) {
                if (!members.empty())
                    members += ' ';
                members += g.name(e);
            }
            os << csv_field(g.name(cc.representatives[i])) << ',' << cc.classes[i].size() << ','
               << csv_field(members) << "\n";
        }
        return os.str();
    }
    case OutputFormat::text: {
        std::ostringstream os;
        os << "order " << g.order() << ", " << cc.class_count() << " conjugacy classes ("
           << cc.central_count << " central)\n";
        for (std::size_t i = 0; i < cc.classes.size(); ++i) {
            os << "  class " << i + 1 << ": representative " << g.name(cc.representatives[i])
               << ", size " << cc.classes[i].size() << ", members {";
            for (std::size_t k = 0; k < cc.classes[i].size(); ++k)
                os << (k ? ", " : "") << g.name(cc.classes[i][k]);
            os << "}\n";
        }
        return os.str();
    }
    }
    return {};
}

std::string report_to_string(const VerificationReport &rep, OutputFormat format) {
    switch (format) {
    case OutputFormat::json: return report_json(rep).dump(2) + "\n";
    case OutputFormat::csv: return std::string(sweep_csv_header) + "\n" + report_csv_row(rep) + "\n";
    case OutputFormat::text: return report_text(rep);
    }
    return {};
}

SweepGrid default_grid() {
    SweepGrid g;
    g.dihedral_n = {3, 4, 5, 6, 7, 8, 9, 10};
    g.dicyclic_n = {2, 3, 4, 5, 6};
    g.semidihedral_n = {1, 2, 3, 4};
    g.characteristics = {0, 3, 5, 7};
    return g;
}

SweepGrid grid_from_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("grid document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw std::invalid_argument("grid document must be a JSON object");
    SweepGrid g;
    auto read_ints = [&doc](const char *key, auto &target) {
        if (!doc.contains(key))
            return false;
        const nlohmann::json &arr = doc.at(key);
        if (!arr.is_array())
            throw std::invalid_argument(std::string("grid key '") + key + "' must be an array");
        for (const nlohmann::json &v : arr) {
            if (!v.is_number_integer() || v.template get<long long>() < 0)
                throw std::invalid_argument(std::string("grid key '") + key +
                                            "' must hold non-negative integers");
            target.push_back(
                static_cast<typename std::decay_t<decltype(target)>::value_type>(
                    v.template get<long long>()));
        }
        return true;
    };
    read_ints("dihedral", g.dihedral_n);
    read_ints("dicyclic", g.dicyclic_n);
    read_ints("semidihedral", g.semidihedral_n);
    if (!read_ints("characteristics", g.characteristics))
        g.characteristics = default_grid().characteristics;
    return g;
}

SweepGrid grid_from_env() {
    const char *env = std::getenv("DERIVA_GRID");
    if (env == nullptr || *env == '\0')
        return default_grid();
    return grid_from_json(env);
}

std::vector<FamilySpec> grid_cells(const SweepGrid &grid) {
    auto sorted_unique = [](auto v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };
    std::vector<unsigned long> chars = sorted_unique(grid.characteristics);
    std::vector<FamilySpec> cells;
    auto expand = [&](Family fam, const std::vector<int> &ns) {
        for (int n : sorted_unique(ns))
            for (unsigned long c : chars)
                cells.push_back({fam, n, c});
    };
    expand(Family::dihedral, grid.dihedral_n);
    expand(Family::dicyclic, grid.dicyclic_n);
    expand(Family::semidihedral, grid.semidihedral_n);
    return cells;
}

SweepOutcome run_sweep(const std::vector<FamilySpec> &cells, int parallelism) {
    if (parallelism < 1)
        throw std::invalid_argument("parallelism must be at least 1");
    SweepOutcome out;
    out.reports.resize(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cells.size())
                return;
            try {
                out.reports[i] = verify_family(cells[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::size_t nthreads =
        std::min<std::size_t>((std::size_t)parallelism, std::max<std::size_t>(cells.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t + 1 < nthreads; ++t)
        pool.emplace_back(worker);
    worker();
    for (std::thread &th : pool)
        th.join();
    for (const std::exception_ptr &e : errors)
        if (e)
            std::rethrow_exception(e);
    for (const VerificationReport &rep : out.reports) {
        if (rep.pass) {
            ++out.pass_count;
        } else {
            ++out.fail_count;
            if (out.first_divergence.empty())
                out.first_divergence = cell_label(rep.spec) + ": " + rep.first_divergence;
        }
    }
    return out;
}

std::string sweep_to_string(const SweepOutcome &outcome, OutputFormat format) {
    switch (format) {
    case OutputFormat::json: {
        ordered_json cells = ordered_json::array();
        for (const VerificationReport &rep : outcome.reports)
            cells.push_back(report_json(rep));
        ordered_json j{{"cells", std::move(cells)},
                       {"summary",
                        ordered_json{{"cells", outcome.reports.size()},
                                     {"pass", outcome.pass_count},
                                     {"fail", outcome.fail_count}}}};
        return j.dump(2) + "\n";
    }
    case OutputFormat::csv: {
        std::ostringstream os;
        os << sweep_csv_header << "\n";
        for (const VerificationReport &rep : outcome.reports)
            os << report_csv_row(rep) << "\n";
        os << "# summary: " << outcome.reports.size() << " cells, " << outcome.pass_count
           << " pass, " << outcome.fail_count << " fail\n";
        return os.str();
    }
    case OutputFormat::text: {
        std::ostringstream os;
        for (const VerificationReport &rep : outcome.reports)
            os << cell_label(rep.spec) << ": " << status_name(rep.pass) << " (der "
               << rep.der_computed << ", inner " << rep.inner_computed << ", outer "
               << rep.outer_computed << ")\n";
        os << "summary: " << outcome.reports.size() << " cells, " << outcome.pass_count
           << " pass, " << outcome.fail_count << " fail\n";
        return os.str();
    }
    }
    return {};
}

}  // namespace deriva
