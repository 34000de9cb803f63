#include "popav/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "popav/avoidance.hpp"
#include "popav/bijections.hpp"
#include "popav/counting.hpp"
#include "popav/errors.hpp"
#include "popav/fib_simples.hpp"
#include "popav/pop.hpp"
#include "popav/structures.hpp"

namespace popav {

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kStructuredCap = 10; // enumerate materializes the structured set
constexpr int kGenerateCap = 12;   // permutation lists; compositions get more room

std::string yesno(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string OutputRecord::to_json() const {
    nlohmann::json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    j["subject"] = subject;
    j["n"] = n;
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& [key, value] : values) vals.push_back({key, value});
    j["values"] = vals;
    j["items"] = items;
    j["ok"] = ok;
    return j.dump();
}

OutputRecord OutputRecord::from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    OutputRecord rec;
    rec.command = j.at("command").get<std::string>();
    rec.subject = j.at("subject").get<std::string>();
    rec.n = j.at("n").get<int>();
    for (const auto& pair : j.at("values"))
        rec.values.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
    for (const auto& item : j.at("items")) rec.items.push_back(item.get<std::string>());
    rec.ok = j.at("ok").get<bool>();
    return rec;
}

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void emit_plain(const std::vector<OutputRecord>& records, std::ostream& out) {
    for (const auto& rec : records) {
        out << rec.command << ' ' << rec.subject << " n=" << rec.n;
        for (const auto& [key, value] : rec.values) out << ' ' << key << '=' << value;
        out << (rec.ok ? "" : "  [FAIL]") << '\n';
        for (const auto& item : rec.items) out << "  " << item << '\n';
    }
}

void emit_json(const std::vector<OutputRecord>& records, std::ostream& out) {
    nlohmann::json j;
    j["schema"] = kSchemaVersion;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rec : records) arr.push_back(nlohmann::json::parse(rec.to_json()));
    j["records"] = arr;
    out << j.dump(2) << '\n';
}

void emit_csv(const std::vector<OutputRecord>& records, std::ostream& out) {
    std::vector<std::string> keys;
    for (const auto& rec : records)
        for (const auto& [key, value] : rec.values)
            if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    out << "command,subject,n,ok";
    for (const auto& key : keys) out << ',' << csv_cell(key);
    out << '\n';
    for (const auto& rec : records) {
        out << csv_cell(rec.command) << ',' << csv_cell(rec.subject) << ',' << rec.n << ','
            << yesno(rec.ok);
        for (const auto& key : keys) {
            std::string cell;
            for (const auto& [k, v] : rec.values)
                if (k == key) cell = v;
            out << ',' << csv_cell(cell);
        }
        out << '\n';
    }
}

} // namespace

void emit_records(const std::vector<OutputRecord>& records, const std::string& format,
                  std::ostream& out) {
    if (format == "plain") emit_plain(records, out);
    else if (format == "json") emit_json(records, out);
    else if (format == "csv") emit_csv(records, out);
    else throw std::invalid_argument("unknown format: " + format);
}

namespace {

std::pair<int, int> parse_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    int lo, hi;
    if (dots == std::string::npos) {
        lo = hi = std::stoi(text);
    } else {
        lo = std::stoi(text.substr(0, dots));
        hi = std::stoi(text.substr(dots + 2));
    }
    if (lo < 0 || hi < lo) throw std::invalid_argument("bad n range: " + text);
    if (hi > 64) throw ResourceLimitError("n range capped at 64");
    return {lo, hi};
}

std::string fixture_file(const FamilySpec& spec) {
    switch (spec.fam) {
        case Family::Lambda:
        case Family::PBasis: return "A111281.txt";
        case Family::P4: return "A045925.txt";
        case Family::R4:
        case Family::Sfrak: return "A214663.txt";
        case Family::Qk:
            if (spec.k == 4) return "A025192.txt";
            if (spec.k == 5) return "A084509.txt";
            return "";
        default: return "";
    }
}

std::vector<std::string> load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read fixture file: " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (std::size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string token;
        while (ls >> token) out.push_back(token);
    }
    return out;
}

int cmd_enumerate(const std::string& family, const std::string& range, int max_brute,
                  const std::string& fixtures_dir, const std::string& format,
                  std::ostream& out) {
    const FamilySpec spec = parse_family(family);
    const auto [lo, hi] = parse_range(range);
    std::vector<std::string> fixture;
    if (!fixtures_dir.empty()) {
        const std::string file = fixture_file(spec);
        if (!file.empty()) fixture = load_fixture(fixtures_dir + "/" + file);
    }
    std::vector<OutputRecord> records;
    bool all_ok = true;
    for (int n = lo; n <= hi; ++n) {
        OutputRecord rec;
        rec.command = "enumerate";
        rec.subject = family_name(spec);
        rec.n = n;
        const std::string closed = count_av(spec, n).str();
        std::string structured = "-", brute = "-", expected = "-";
        if (n <= kStructuredCap)
            structured = std::to_string(structured_av(spec, n).size());
        if (n <= max_brute) brute = std::to_string(brute_av(spec, n, max_brute).size());
        if (n >= 1 && n <= static_cast<int>(fixture.size()))
            expected = fixture[static_cast<std::size_t>(n - 1)];
        bool agree = true;
        for (const std::string& v : {structured, brute, expected})
            if (v != "-" && v != closed) agree = false;
        rec.values = {{"structured", structured},
                      {"brute", brute},
                      {"closed", closed},
                      {"agree", yesno(agree)}};
        if (!fixture.empty()) rec.values.insert(rec.values.end() - 1, {"fixture", expected});
        rec.ok = agree;
        all_ok = all_ok && agree;
        records.push_back(std::move(rec));
    }
    emit_records(records, format, out);
    return all_ok ? 0 : 1;
}

int cmd_generate(const std::string& family, int n, const std::string& format,
                 std::ostream& out) {
    OutputRecord rec;
    rec.command = "generate";
    rec.subject = family;
    rec.n = n;
    if (family == "compositions") {
        if (n > 24) throw ResourceLimitError("composition listing capped at n = 24");
        for (const auto& c : gen_compositions(n)) rec.items.push_back(c.str());
    } else if (family == "marked-compositions") {
        if (n > 24) throw ResourceLimitError("marked listing capped at n = 24");
        for (const auto& m : gen_marked_compositions(n)) rec.items.push_back(m.str());
    } else if (family == "shrubs") {
        if (n > 8) throw ResourceLimitError("forest listing capped at 8 heaps");
        for (const auto& p : gen_shrub_forests(n)) rec.items.push_back(p.str());
    } else if (family.rfind("juggling:", 0) == 0) {
        const int balls = std::stoi(family.substr(9));
        if (n > kGenerateCap) throw ResourceLimitError("sequence listing capped at n = 12");
        for (const auto& s : gen_ground_juggling(n, balls)) rec.items.push_back(s.str());
    } else if (family == "simples-fib") {
        if (n > 30) throw ResourceLimitError("simple-family listing capped at n = 30");
        for (const auto& p : gen_simple_family(n)) rec.items.push_back(p.str());
    } else {
        const FamilySpec spec = parse_family(family);
        if (n > kGenerateCap) throw ResourceLimitError("family listing capped at n = 12");
        for (const auto& p : structured_av(spec, n)) rec.items.push_back(p.str());
    }
    rec.values = {{"count", std::to_string(rec.items.size())}};
    emit_records({rec}, format, out);
    return 0;
}

int cmd_permanent(const std::string& matrix_arg, const std::string& format,
                  std::ostream& out) {
    RestrictionMatrix m(0);
    if (matrix_arg.rfind("qk:", 0) == 0) {
        const std::string args = matrix_arg.substr(3);
        const std::size_t comma = args.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("want qk:<k>,<n>");
        m = RestrictionMatrix::qk(std::stoi(args.substr(0, comma)),
                                  std::stoi(args.substr(comma + 1)));
    } else if (matrix_arg.rfind("juggling:", 0) == 0) {
        const std::string args = matrix_arg.substr(9);
        const std::size_t comma = args.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("want juggling:<b>,<n>");
        m = RestrictionMatrix::juggling(std::stoi(args.substr(0, comma)),
                                        std::stoi(args.substr(comma + 1)));
    } else {
        std::ifstream in(matrix_arg);
        if (!in) throw std::invalid_argument("cannot read matrix file: " + matrix_arg);
        std::stringstream buf;
        buf << in.rdbuf();
        m = RestrictionMatrix::parse(buf.str());
    }
    OutputRecord rec;
    rec.command = "permanent";
    rec.subject = matrix_arg;
    rec.n = m.size();
    const std::string value = permanent(m).str();
    rec.values = {{"permanent", value}};
    rec.ok = true;
    if (m.size() <= 9) {
        const std::string naive = permanent_naive(m).str();
        rec.ok = naive == value;
        rec.values.emplace_back("naive", naive);
        rec.values.emplace_back("agree", yesno(rec.ok));
    }
    emit_records({rec}, format, out);
    return rec.ok ? 0 : 1;
}

int cmd_map(const std::string& name, const std::string& input, int balls, int k, int j,
            const std::string& format, std::ostream& out) {
    std::string output;
    int n = 0;
    auto need_balls = [&] {
        if (balls < 0) throw std::invalid_argument(name + " needs --balls");
    };
    if (name == "lambda-to-P" || name == "P-to-lambda" || name == "shrub" ||
        name == "shrub-inv" || name == "qkj" || name == "qkj-rebase" ||
        name == "qkj-rebase-inv" || name == "P3-to-comp" ||
        name == "P4-to-marked" || name == "R4-to-Sfrak" || name == "Sfrak-to-R4") {
        const Permutation p = Permutation::parse(input);
        n = p.size();
        if (name == "lambda-to-P") output = lambda_to_P(p).str();
        else if (name == "P-to-lambda") output = P_to_lambda(p).str();
        else if (name == "shrub") output = avQ4_to_shrub(p).str();
        else if (name == "shrub-inv") output = shrub_to_avQ4(p).str();
        else if (name == "P3-to-comp") output = avP3_to_comp(p).str();
        else if (name == "P4-to-marked") output = avP4_to_marked(p).str();
        else if (name == "R4-to-Sfrak") output = avR4_to_bounded(p).str();
        else if (name == "Sfrak-to-R4") output = bounded_to_avR4(p).str();
        else {
            if (k < 1 || j < 1) throw std::invalid_argument(name + " needs --k and --j");
            if (name == "qkj") output = qkj_conjugate(p, k, j).str();
            else if (name == "qkj-rebase") output = qkj_rebase(p, k, j).str();
            else output = qkj_rebase_inv(p, k, j).str();
        }
    } else if (name == "juggling") {
        need_balls();
        const JugglingSequence s = JugglingSequence::parse(input, balls);
        n = s.period();
        output = juggling_to_avQ(s).str();
    } else if (name == "juggling-inv") {
        need_balls();
        const Permutation p = Permutation::parse(input);
        n = p.size();
        output = avQ_to_juggling(p, balls).str();
    } else if (name == "comp-to-P3") {
        const Composition c = Composition::parse(input);
        n = c.total();
        output = comp_to_avP3(c).str();
    } else if (name == "marked-to-P4") {
        const MarkedComposition m = MarkedComposition::parse(input);
        n = m.total();
        output = marked_to_avP4(m).str();
    } else {
        throw std::invalid_argument("unknown bijection: " + name);
    }
    OutputRecord rec;
    rec.command = "map";
    rec.subject = name;
    rec.n = n;
    rec.values = {{"input", input}, {"output", output}};
    emit_records({rec}, format, out);
    return 0;
}

OutputRecord report_to_record(const BijectionReport& report) {
    OutputRecord rec;
    rec.command = "verify";
    rec.subject = report.name;
    rec.n = report.n;
    rec.values = {{"domain", std::to_string(report.domain_size)},
                  {"codomain", std::to_string(report.codomain_size)},
                  {"image_in_codomain", yesno(report.image_in_codomain)},
                  {"injective", yesno(report.injective)},
                  {"surjective", yesno(report.surjective)},
                  {"round_trip", yesno(report.round_trip)},
                  {"ok", yesno(report.ok())}};
    rec.items = report.failures;
    rec.ok = report.ok();
    return rec;
}

int cmd_verify(const std::string& name, bool all, int n, int balls, int k, int j,
               const std::string& format, std::ostream& out) {
    std::vector<OutputRecord> records;
    bool all_ok = true;
    if (all) {
        for (const auto& report : verify_all_bijections(n)) {
            records.push_back(report_to_record(report));
            all_ok = all_ok && report.ok();
        }
    } else {
        if (name.empty()) throw std::invalid_argument("verify needs --bijection or --all");
        const BijectionReport report = verify_bijection(name, n, balls, k, j);
        records.push_back(report_to_record(report));
        all_ok = report.ok();
    }
    emit_records(records, format, out);
    return all_ok ? 0 : 1;
}

int cmd_simples(int n, const std::string& family, bool check_2431,
                const std::string& format, std::ostream& out) {
    if (n > 30) throw ResourceLimitError("simple-family listing capped at n = 30");
    std::vector<Permutation> list;
    if (family.empty()) {
        list = gen_simple_family(n);
    } else {
        const SimpleFamilies fams = simple_families(n);
        if (family == "A") list = fams.a;
        else if (family == "B") list = fams.b;
        else if (family == "C") list = fams.c;
        else throw std::invalid_argument("family must be A, B, or C");
    }
    OutputRecord rec;
    rec.command = "simples";
    rec.subject = family.empty() ? "all" : family;
    rec.n = n;
    for (const auto& p : list) rec.items.push_back(p.str());
    rec.values = {{"count", std::to_string(list.size())}};
    if (check_2431) {
        const Permutation probe = Permutation::parse("2431");
        bool clean = true;
        for (const auto& p : list)
            if (contains_pattern(p, probe)) clean = false;
        rec.values.emplace_back("avoid_2431", yesno(clean));
        rec.ok = clean;
    }
    emit_records({rec}, format, out);
    return rec.ok ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"permutation family enumeration, generation, and cross-verification"};
    app.require_subcommand(1);

    std::string format = "plain";
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"plain", "json", "csv"}));
    };

    auto* enum_cmd = app.add_subcommand("enumerate", "count a family across a range of sizes");
    std::string enum_family, enum_range, fixtures_dir;
    int max_brute = 9;
    enum_cmd->add_option("--family", enum_family, "family name")->required();
    enum_cmd->add_option("--n", enum_range, "size or range a..b")->required();
    enum_cmd->add_option("--max-brute-n", max_brute, "largest size scanned exhaustively")
        ->envname("POPAV_MAX_BRUTE_N");
    enum_cmd->add_option("--seed-fixtures", fixtures_dir, "directory of expected-sequence files");
    add_format(enum_cmd);

    auto* gen_cmd = app.add_subcommand("generate", "list a family's members at one size");
    std::string gen_family;
    int gen_n = 0;
    gen_cmd->add_option("--family", gen_family, "family name")->required();
    gen_cmd->add_option("--n", gen_n, "size")->required();
    add_format(gen_cmd);

    auto* perm_cmd = app.add_subcommand("permanent", "exact permanent of a 0/1 matrix");
    std::string matrix_arg;
    perm_cmd->add_option("--matrix", matrix_arg, "file path, qk:<k>,<n>, or juggling:<b>,<n>")
        ->required();
    add_format(perm_cmd);

    auto* map_cmd = app.add_subcommand("map", "apply one bijection to one element");
    std::string map_name, map_input;
    int map_balls = -1, map_k = -1, map_j = -1;
    map_cmd->add_option("--bijection", map_name, "bijection name")->required();
    map_cmd->add_option("--input", map_input, "element in its text form")->required();
    map_cmd->add_option("--balls", map_balls, "ball count for juggling maps");
    map_cmd->add_option("--k", map_k, "fan size for the fan maps");
    map_cmd->add_option("--j", map_j, "root label for the fan maps");
    add_format(map_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "check bijections elementwise at one size");
    std::string verify_name;
    bool verify_all = false;
    int verify_n = 0, verify_balls = -1, verify_k = -1, verify_j = -1;
    verify_cmd->add_option("--bijection", verify_name, "bijection name");
    verify_cmd->add_flag("--all", verify_all, "sweep every bijection");
    verify_cmd->add_option("--n", verify_n, "size")->required();
    verify_cmd->add_option("--balls", verify_balls, "ball count for the juggling bijection");
    verify_cmd->add_option("--k", verify_k, "fan size for the fan maps");
    verify_cmd->add_option("--j", verify_j, "root label for the fan maps");
    add_format(verify_cmd);

    auto* simples_cmd = app.add_subcommand("simples", "Fibonacci family of simple avoiders");
    int simples_n = 0;
    std::string simples_family;
    bool check_2431 = false;
    simples_cmd->add_option("--n", simples_n, "size")->required();
    simples_cmd->add_option("--family", simples_family, "A, B, or C");
    simples_cmd->add_flag("--check-2431", check_2431, "also check avoidance of 2431");
    add_format(simples_cmd);

    std::vector<std::string> argv_store;
    argv_store.push_back("popav");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_store.size());
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*enum_cmd)
            return cmd_enumerate(enum_family, enum_range, max_brute, fixtures_dir, format, out);
        if (*gen_cmd) return cmd_generate(gen_family, gen_n, format, out);
        if (*perm_cmd) return cmd_permanent(matrix_arg, format, out);
        if (*map_cmd)
            return cmd_map(map_name, map_input, map_balls, map_k, map_j, format, out);
        if (*verify_cmd)
            return cmd_verify(verify_name, verify_all, verify_n, verify_balls, verify_k,
                              verify_j, format, out);
        if (*simples_cmd)
            return cmd_simples(simples_n, simples_family, check_2431, format, out);
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "no command selected\n";
    return 2;
}

} // namespace popav
