#include "deriva/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace deriva;

struct Options {
    std::string family;
    int n = 0;
    std::string cayley;
    unsigned long characteristic = 0;
    std::string format = "text";
    std::string out;
    int parallel = 1;
    bool allow_degenerate = false;
    std::string families;  // sweep: comma-separated family subset
    std::string chars;     // sweep: comma-separated characteristic override
    std::string matrix;    // witness: derivation-matrix JSON file
};

void add_group_options(CLI::App *cmd, Options &opt) {
    cmd->add_option("--family", opt.family, "group family: dihedral|dicyclic|semidihedral");
    cmd->add_option("--n", opt.n, "family parameter n");
    cmd->add_option("--cayley", opt.cayley, "multiplication-table file (.csv or .json)");
    cmd->add_option("--char", opt.characteristic, "coefficient characteristic: 0 or a prime");
    cmd->add_flag("--allow-degenerate", opt.allow_degenerate,
                  "accept parameters that degenerate to abelian groups");
}

void add_output_options(CLI::App *cmd, Options &opt) {
    cmd->add_option("--format", opt.format, "output format: json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", opt.out, "write output to this file instead of standard output");
}

std::vector<std::string> split_list(const std::string &s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            if (!cur.empty())
                parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!cur.empty())
        parts.push_back(cur);
    return parts;
}

FiniteGroup load_cayley_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::vector<std::vector<int>> table;
    std::vector<int> generators;
    std::vector<GroupWord> relators;
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception &e) {
            throw NotAGroup(std::string("table file is not valid JSON: ") + e.what());
        }
        if (!doc.is_object() || !doc.contains("table") || !doc.at("table").is_array())
            throw NotAGroup("table file must hold an object with a 'table' array");
        for (const nlohmann::json &row : doc.at("table")) {
            if (!row.is_array())
                throw NotAGroup("'table' must be an array of arrays");
            std::vector<int> r;
            for (const nlohmann::json &v : row) {
                if (!v.is_number_integer())
                    throw NotAGroup("'table' entries must be integers");
                r.push_back(v.get<int>());
            }
            table.push_back(std::move(r));
        }
        if (doc.contains("generators")) {
            for (const nlohmann::json &v : doc.at("generators")) {
                if (!v.is_number_integer())
                    throw NotAGroup("'generators' entries must be integers");
                generators.push_back(v.get<int>());
            }
        }
        if (doc.contains("relators")) {
            for (const nlohmann::json &v : doc.at("relators")) {
                if (!v.is_string())
                    throw NotAGroup("'relators' entries must be words over a..z/A..Z");
                relators.push_back(parse_word(v.get<std::string>()));
            }
        }
    } else {
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            if (line.empty())
                continue;
            std::vector<int> row;
            std::string tok;
            std::istringstream cells(line);
            while (std::getline(cells, tok, ',')) {
                try {
                    std::size_t used = 0;
                    int v = std::stoi(tok, &used);
                    while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used])))
                        ++used;
                    if (used != tok.size())
                        throw std::invalid_argument(tok);
                    row.push_back(v);
                } catch (const std::exception &) {
                    throw NotAGroup("table entries must be zero-based integers");
                }
            }
            table.push_back(std::move(row));
        }
    }
    return FiniteGroup::from_cayley(table, generators, relators);
}

// exactly one of --family/--cayley
void check_one_source(const Options &opt) {
    bool have_family = !opt.family.empty();
    bool have_cayley = !opt.cayley.empty();
    if (have_family == have_cayley)
        throw std::invalid_argument("exactly one of --family and --cayley is required");
    if (have_family && opt.n <= 0)
        throw std::invalid_argument("--n must be a positive integer");
}

FamilySpec parse_family_spec(const Options &opt) {
    std::optional<Family> fam = family_from_name(opt.family);
    if (!fam)
        throw std::invalid_argument("unknown family '" + opt.family + "'");
    return FamilySpec{*fam, opt.n, opt.characteristic};
}

FiniteGroup load_group(const Options &opt) {
    if (!opt.cayley.empty())
        return load_cayley_file(opt.cayley);
    return build_group(parse_family_spec(opt), opt.allow_degenerate);
}

std::string group_label(const Options &opt) {
    if (!opt.cayley.empty())
        return opt.cayley;
    return opt.family + " n=" + std::to_string(opt.n);
}

OutputFormat parse_format(const Options &opt) {
    std::optional<OutputFormat> f = format_from_name(opt.format);
    if (!f)
        throw std::invalid_argument("unknown format '" + opt.format + "'");
    return *f;
}

void emit(const Options &opt, const std::string &payload) {
    if (opt.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opt.out, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open '" + opt.out + "' for writing");
    out << payload;
}

int cmd_classes(const Options &opt) {
    check_one_source(opt);
    make_field(opt.characteristic);  // validate even though classes ignore the field
    FiniteGroup g = load_group(opt);
    emit(opt, classes_to_string(g, parse_format(opt)));
    return 0;
}

int cmd_dimensions(const Options &opt) {
    check_one_source(opt);
    Field f = make_field(opt.characteristic);
    FiniteGroup g = load_group(opt);
    emit(opt, dimensions_to_string(compute_dimensions(g, f, group_label(opt)), parse_format(opt)));
    return 0;
}

int cmd_verify(const Options &opt) {
    if (opt.family.empty() || !opt.cayley.empty())
        throw std::invalid_argument("verify works on --family groups only");
    FamilySpec spec = parse_family_spec(opt);
    VerificationReport rep = verify_family(spec, opt.allow_degenerate);
    emit(opt, report_to_string(rep, parse_format(opt)));
    if (!rep.pass) {
        std::cerr << "first divergence: " << rep.first_divergence << "\n";
        return 1;
    }
    return 0;
}

int cmd_sweep(const Options &opt) {
    SweepGrid grid = grid_from_env();
    if (!opt.families.empty()) {
        SweepGrid filtered;
        filtered.characteristics = grid.characteristics;
        for (const std::string &name : split_list(opt.families)) {
            std::optional<Family> fam = family_from_name(name);
            if (!fam)
                throw std::invalid_argument("unknown family '" + name + "'");
            switch (*fam) {
            case Family::dihedral: filtered.dihedral_n = grid.dihedral_n; break;
            case Family::dicyclic: filtered.dicyclic_n = grid.dicyclic_n; break;
            case Family::semidihedral: filtered.semidihedral_n = grid.semidihedral_n; break;
            }
        }
        grid = filtered;
    }
    if (!opt.chars.empty()) {
        grid.characteristics.clear();
        for (const std::string &tok : split_list(opt.chars)) {
            try {
                std::size_t used = 0;
                unsigned long c = std::stoul(tok, &used);
                if (used != tok.size())
                    throw std::invalid_argument(tok);
                grid.characteristics.push_back(c);
            } catch (const std::exception &) {
                throw std::invalid_argument("bad characteristic '" + tok + "'");
            }
        }
    }
    for (unsigned long c : grid.characteristics) {
        make_field(c);  // composite -> usage error
        if (c == 2)
            throw CharTwoUnsupported();
    }
    SweepOutcome outcome = run_sweep(grid_cells(grid), opt.parallel);
    emit(opt, sweep_to_string(outcome, parse_format(opt)));
    if (!outcome.all_pass()) {
        std::cerr << "first divergence: " << outcome.first_divergence << "\n";
        return 1;
    }
    return 0;
}

int cmd_witness(const Options &opt) {
    check_one_source(opt);
    Field f = make_field(opt.characteristic);
    FiniteGroup g = load_group(opt);
    std::ifstream in(opt.matrix);
    if (!in)
        throw std::invalid_argument("cannot open '" + opt.matrix + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception &) {
        throw NotADerivation();
    }
    DerivationMatrix d = matrix_from_json(g, f, doc);
    std::optional<AlgebraElement> beta = innerness_witness(d);
    if (!beta) {
        emit(opt, "OUTER\n");
        return 0;
    }
    switch (parse_format(opt)) {
    case OutputFormat::json: emit(opt, element_to_json(*beta).dump(2) + "\n"); break;
    case OutputFormat::csv: {
        std::string row;
        for (int k = 0; k < g.order(); ++k) {
            if (k)
                row += ',';
            row += f.to_string((*beta)[k]);
        }
        emit(opt, row + "\n");
        break;
    }
    case OutputFormat::text: emit(opt, element_to_text(*beta) + "\n"); break;
    }
    return 0;
}

int dispatch(const std::string &cmd, const Options &opt) {
    if (cmd == "classes")
        return cmd_classes(opt);
    if (cmd == "dimensions")
        return cmd_dimensions(opt);
    if (cmd == "verify")
        return cmd_verify(opt);
    if (cmd == "sweep")
        return cmd_sweep(opt);
    return cmd_witness(opt);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact derivation spaces of finite group algebras"};
    app.require_subcommand(1);
    Options opt;

    CLI::App *classes = app.add_subcommand("classes", "print the conjugacy classes");
    add_group_options(classes, opt);
    add_output_options(classes, opt);

    CLI::App *dimensions =
        app.add_subcommand("dimensions", "derivation/inner/outer dimensions of one group algebra");
    add_group_options(dimensions, opt);
    add_output_options(dimensions, opt);

    CLI::App *verify =
        app.add_subcommand("verify", "run the full verification battery for one family instance");
    add_group_options(verify, opt);
    add_output_options(verify, opt);

    CLI::App *sweep = app.add_subcommand("sweep", "verify every cell of the parameter grid");
    add_group_options(sweep, opt);
    add_output_options(sweep, opt);
    sweep->add_option("--families", opt.families, "comma-separated family subset");
    sweep->add_option("--chars", opt.chars, "comma-separated characteristic list");
    sweep->add_option("--parallel", opt.parallel, "worker thread count")
        ->check(CLI::PositiveNumber);

    CLI::App *witness =
        app.add_subcommand("witness", "decide whether a derivation matrix is inner");
    add_group_options(witness, opt);
    add_output_options(witness, opt);
    witness->add_option("matrix", opt.matrix, "derivation-matrix JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return dispatch(cmd, opt);
    } catch (const NotAGroup &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const RelatorViolation &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NonGeneratingSet &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const WordSyntax &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NotADerivation &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
