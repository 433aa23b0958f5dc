// Command-line front end: sequence registry, walk/CT engines, transforms,
// recurrence and operator tools, enumeration oracles, branching checks, and
// the full regression suite (`check`).
//
// Exit codes: 0 success, 1 check/verification failure, 2 usage error.

#include "tensorwalk/branching.hpp"
#include "tensorwalk/checks.hpp"
#include "tensorwalk/closedforms.hpp"
#include "tensorwalk/combinat.hpp"
#include "tensorwalk/fixtures.hpp"
#include "tensorwalk/holonomic.hpp"
#include "tensorwalk/laurent.hpp"
#include "tensorwalk/sequences.hpp"
#include "tensorwalk/serialization.hpp"
#include "tensorwalk/transforms.hpp"
#include "tensorwalk/walks.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace tensorwalk;

std::string g_format = "json";

void emit(const json& j) {
    if (g_format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // csv: arrays become index,value rows; objects become key,value rows
    if (j.is_array()) {
        std::cout << "n,value\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            const auto& v = j[i];
            std::cout << i << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    } else {
        for (const auto& [k, v] : j.items())
            std::cout << k << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

json seq_json(const Sequence& a) {
    json arr = json::array();
    for (const auto& v : a) arr.push_back(v.str());
    return arr;
}

Sequence parse_terms_list(const std::string& csv) {
    Sequence out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_decimal(item));
    return out;
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    return io::read_file(path);
}

walks::WalkConfig resolve_config(const std::string& name, const std::string& config_path, int k) {
    if (!config_path.empty()) return io::walk_config_from_json(io::read_file(config_path));
    return walks::builtin_config(name, k);
}

// --- subcommand wiring ---

struct SeqArgs {
    std::string name;
    int terms = 10;
};

struct WalkArgs {
    std::string name = "octant_g2";
    std::string config_path;
    int k = 0;
    int n = 10;
    std::string axis;
    bool endpoints = false;
};

struct CtArgs {
    std::string name = "g2";
    std::string spec_path;
    int k = 0;
    int n = 10;
};

int run_check(const checks::CheckOptions& options) {
    const auto reports = checks::check_all(options);
    json arr = json::array();
    bool ok = true;
    for (const auto& r : reports) {
        json item;
        item["name"] = r.name;
        item["status"] = checks::status_name(r.status);
        item["details"] = r.details;
        item["criterion"] = checks::criterion_of(r.name);
        arr.push_back(item);
        ok = ok && r.status != checks::CheckReport::Status::fail;
    }
    if (g_format == "csv") {
        std::cout << "name,status,details\n";
        for (const auto& r : reports)
            std::cout << r.name << "," << checks::status_name(r.status) << ",\"" << r.details
                      << "\"\n";
    } else {
        emit(arr);
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact integer-sequence engines for octant and quadrant walk families"};
    app.require_subcommand(1);
    app.add_option("--format", g_format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    int exit_code = 0;

    // seq
    SeqArgs seq;
    auto* seq_cmd = app.add_subcommand("seq", "print a named sequence");
    seq_cmd->add_option("name", seq.name, "sequence name or OEIS tag")->required();
    seq_cmd->add_option("--terms", seq.terms, "number of terms")->capture_default_str();
    seq_cmd->callback([&] { emit(seq_json(sequences::named_sequence(seq.name, seq.terms - 1))); });

    // walk
    WalkArgs wa;
    auto* walk_cmd = app.add_subcommand("walk", "run the lattice-walk counter");
    walk_cmd->add_option("--name", wa.name, "built-in config name")->capture_default_str();
    walk_cmd->add_option("--config", wa.config_path, "path to a walk-config JSON file");
    walk_cmd->add_option("--k", wa.k, "number of extra zero steps")->capture_default_str();
    walk_cmd->add_option("--n", wa.n, "walk length bound")->capture_default_str();
    walk_cmd->add_option("--axis", wa.axis, "sum endpoints on an axis (x or y)");
    walk_cmd->add_flag("--endpoints", wa.endpoints, "emit the endpoint table at length n");
    walk_cmd->callback([&] {
        const auto cfg = resolve_config(wa.name, wa.config_path, wa.k);
        if (wa.endpoints) {
            const auto tables = walks::count_endpoints(cfg, wa.n);
            json obj = json::object();
            for (const auto& [pos, cnt] : tables[wa.n].counts) {
                obj[std::to_string(pos[0]) + "," + std::to_string(pos[1])] = cnt.str();
            }
            emit(obj);
        } else if (!wa.axis.empty()) {
            if (wa.axis != "x" && wa.axis != "y") throw CLI::ValidationError("--axis must be x or y");
            emit(seq_json(walks::axis_sum(cfg, wa.axis == "x" ? 0 : 1, wa.n)));
        } else {
            emit(seq_json(walks::excursions(cfg, wa.n)));
        }
    });

    // ct
    CtArgs ct;
    auto* ct_cmd = app.add_subcommand("ct", "constant-term sequence of delta * kernel^n");
    ct_cmd->add_option("--name", ct.name, "built-in spec (g2, quadrant, sl2)")->capture_default_str();
    ct_cmd->add_option("--spec", ct.spec_path, "path to a CT-spec JSON file");
    ct_cmd->add_option("--k", ct.k, "constant-term weight of the quadrant kernel")
        ->capture_default_str();
    ct_cmd->add_option("--n", ct.n, "last index")->capture_default_str();
    ct_cmd->callback([&] {
        const laurent::CTSpec spec = ct.spec_path.empty()
                                         ? laurent::builtin_ct_spec(ct.name, ct.k)
                                         : io::ct_spec_from_json(io::read_file(ct.spec_path));
        emit(seq_json(laurent::ct_sequence(spec, ct.n)));
    });

    // bt
    long bt_power_k = 1;
    std::string bt_input;
    auto* bt_cmd = app.add_subcommand("bt", "binomial-transform power of a JSON term array");
    bt_cmd->add_option("--power", bt_power_k, "transform power (any integer)")->capture_default_str();
    bt_cmd->add_option("--input", bt_input, "input path (default: stdin)");
    bt_cmd->callback([&] {
        const Sequence a = io::sequence_from_json(read_input(bt_input));
        emit(seq_json(transforms::bt_power(a, bt_power_k)));
    });

    // rec
    auto* rec_cmd = app.add_subcommand("rec", "recurrence tools");
    rec_cmd->require_subcommand(1);
    std::string rec_name = "t3_rec", rec_initial, rec_input;
    int rec_k = 0, rec_n = 20, rec_max_order = 4, rec_max_degree = 3;
    bool rec_rational = false;

    auto* rec_unroll = rec_cmd->add_subcommand("unroll", "extend a recurrence from initial terms");
    rec_unroll->add_option("--name", rec_name, "registry recurrence")->capture_default_str();
    rec_unroll->add_option("--k", rec_k, "parameter for quadrant_rec")->capture_default_str();
    rec_unroll->add_option("--initial", rec_initial, "comma-separated initial terms");
    rec_unroll->add_option("--n", rec_n, "last index")->capture_default_str();
    rec_unroll->add_flag("--rational", rec_rational, "allow non-integer terms");
    rec_unroll->callback([&] {
        const auto rec = fixtures::paper_recurrence(rec_name, rec_k);
        Sequence init;
        if (!rec_initial.empty()) {
            init = parse_terms_list(rec_initial);
        } else if (rec_name == "t3_rec") {
            init = {1, 0, 1};
        } else if (rec_name == "e3_rec") {
            init = {1, 1};
        } else if (rec_name == "s3_rec") {
            init = {1, 3};
        } else {
            init = walks::excursions(walks::builtin_config("quadrant_sl3", rec_k), 3);
        }
        if (rec_rational) {
            const auto terms = holonomic::unroll_rational(rec, init, rec_n);
            json arr = json::array();
            for (const auto& v : terms) arr.push_back(to_fraction_string(v));
            emit(arr);
        } else {
            emit(seq_json(holonomic::unroll(rec, init, rec_n)));
        }
    });

    auto* rec_verify = rec_cmd->add_subcommand("verify", "check a recurrence against terms");
    rec_verify->add_option("--name", rec_name, "registry recurrence")->capture_default_str();
    rec_verify->add_option("--k", rec_k, "parameter for quadrant_rec")->capture_default_str();
    rec_verify->add_option("--input", rec_input, "JSON term array path (default: stdin)");
    rec_verify->callback([&] {
        const auto rec = fixtures::paper_recurrence(rec_name, rec_k);
        const Sequence a = io::sequence_from_json(read_input(rec_input));
        const auto violation = holonomic::check_recurrence(rec, a);
        json j;
        j["ok"] = !violation.has_value();
        if (violation) j["first_violation"] = *violation;
        emit(j);
        if (violation) exit_code = 1;
    });

    auto* rec_guess = rec_cmd->add_subcommand("guess", "fit a minimal recurrence to terms");
    rec_guess->add_option("--input", rec_input, "JSON term array path (default: stdin)");
    rec_guess->add_option("--max-order", rec_max_order, "order bound")->capture_default_str();
    rec_guess->add_option("--max-degree", rec_max_degree, "coefficient degree bound")
        ->capture_default_str();
    rec_guess->callback([&] {
        const Sequence a = io::sequence_from_json(read_input(rec_input));
        const auto rec = holonomic::guess_recurrence(a, rec_max_order, rec_max_degree);
        if (!rec) {
            json j;
            j["found"] = false;
            emit(j);
            exit_code = 1;
            return;
        }
        json j = json::parse(io::recurrence_to_json(*rec));
        j["found"] = true;
        j["order"] = rec->order();
        emit(j);
    });

    // ode
    auto* ode_cmd = app.add_subcommand("ode", "differential-operator tools");
    ode_cmd->require_subcommand(1);
    std::string ode_name = "L3", ode_a = "Q", ode_b = "L3", ode_seq = "T3";
    int ode_order = 60;

    auto* ode_apply = ode_cmd->add_subcommand("apply", "apply an operator to a sequence's series");
    ode_apply->add_option("--name", ode_name, "registry operator")->capture_default_str();
    ode_apply->add_option("--seq", ode_seq, "named sequence")->capture_default_str();
    ode_apply->add_option("--order", ode_order, "series truncation order")->capture_default_str();
    ode_apply->callback([&] {
        const auto op = fixtures::paper_diffop(ode_name);
        const auto g = series::from_sequence(sequences::named_sequence(ode_seq, ode_order));
        const auto res = holonomic::diffop_apply(op, g);
        json arr = json::array();
        for (int i = 0; i <= res.order(); ++i) arr.push_back(to_fraction_string(res[i]));
        emit(arr);
    });

    auto* ode_mul = ode_cmd->add_subcommand("mul", "compose two registry operators");
    ode_mul->add_option("--a", ode_a, "left factor")->capture_default_str();
    ode_mul->add_option("--b", ode_b, "right factor")->capture_default_str();
    ode_mul->callback([&] {
        const auto prod = holonomic::diffop_mul(fixtures::paper_diffop(ode_a),
                                                fixtures::paper_diffop(ode_b));
        emit(json::parse(io::diffop_to_json(prod)));
    });

    auto* ode_torec = ode_cmd->add_subcommand("to-rec", "coefficient recurrence of an operator");
    ode_torec->add_option("--name", ode_name, "registry operator")->capture_default_str();
    ode_torec->callback([&] {
        const auto rec = holonomic::ode_to_recurrence(fixtures::paper_diffop(ode_name));
        emit(json::parse(io::recurrence_to_json(rec)));
    });

    // closedform
    std::string cf_name = "t3_hypergeometric_simple";
    int cf_order = 60;
    auto* cf_cmd = app.add_subcommand("closedform", "closed-formula verification");
    cf_cmd->require_subcommand(1);
    auto* cf_verify = cf_cmd->add_subcommand("verify", "compare a closed form with its reference");
    cf_verify->add_option("--name", cf_name, "closed-form name")->capture_default_str();
    cf_verify->add_option("--order", cf_order, "comparison order")->capture_default_str();
    cf_verify->callback([&] {
        const auto rep = series::verify_closed_form(cf_name, cf_order);
        json j;
        j["name"] = rep.name;
        j["ok"] = rep.ok;
        j["checked_to"] = rep.checked_to;
        if (!rep.ok) {
            j["first_mismatch"] = rep.first_mismatch;
            j["details"] = rep.detail;
        }
        emit(j);
        if (!rep.ok) exit_code = 1;
    });

    // asym
    std::string asym_samples = "500,1000,2000";
    auto* asym_cmd = app.add_subcommand("asym", "growth-constant ratios and extrapolation");
    asym_cmd->add_option("--samples", asym_samples, "comma-separated doubling sample points")
        ->capture_default_str();
    asym_cmd->callback([&] {
        std::vector<int> samples;
        std::stringstream ss(asym_samples);
        std::string item;
        while (std::getline(ss, item, ',')) samples.push_back(std::stoi(item));
        const auto rep = series::asymptotic_estimate(samples);
        json j;
        j["samples"] = rep.samples;
        j["ratios"] = rep.ratios;
        j["extrapolated"] = rep.extrapolated;
        j["target"] = rep.target;
        j["relative_deviation"] = rep.best_rel_dev;
        j["monotone"] = rep.monotone;
        emit(j);
    });

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force enumeration oracles");
    oracle_cmd->require_subcommand(1);
    int on = 5, omax_cross = 0, omax_enh = 0, om = 1;
    bool ono_singletons = false, ono_wdec3 = false, ono_fixed = false, oexclude_zero = false;
    std::string okind = "hesitating", oshape = "0,0", ocontent = "1,2", ovariant = "s0";

    auto* o_part = oracle_cmd->add_subcommand("partitions", "filtered set partitions of [n]");
    o_part->add_option("--n", on, "ground-set size")->required();
    o_part->add_flag("--no-singletons", ono_singletons, "forbid singleton blocks");
    o_part->add_option("--max-crossing", omax_cross, "forbid k-crossings for this k");
    o_part->add_option("--max-enhanced-crossing", omax_enh, "forbid enhanced k-crossings");
    o_part->callback([&] {
        combinat::PartitionFilter f;
        f.forbid_singletons = ono_singletons;
        if (omax_cross > 0) f.max_crossing = omax_cross;
        if (omax_enh > 0) f.max_enhanced_crossing = omax_enh;
        json j;
        j["count"] = combinat::count_set_partitions(on, f).str();
        emit(j);
    });

    auto* o_inv = oracle_cmd->add_subcommand("inversions", "filtered inversion sequences");
    o_inv->add_option("--n", on, "length")->required();
    o_inv->add_flag("--forbid-wdec3", ono_wdec3, "no weakly decreasing subsequence of length 3");
    o_inv->add_flag("--forbid-fixed", ono_fixed, "no x_i = i");
    o_inv->callback([&] {
        json j;
        j["count"] = combinat::count_inversion_sequences(on, {ono_wdec3, ono_fixed}).str();
        emit(j);
    });

    auto* o_tab = oracle_cmd->add_subcommand("tableaux", "height-2 tableau walks");
    o_tab->add_option("--kind", okind, "hesitating or vacillating")->capture_default_str();
    o_tab->add_option("--n", on, "semilength")->required();
    o_tab->add_option("--shape", oshape, "target shape x,y")->capture_default_str();
    o_tab->add_flag("--exclude-row1-zero", oexclude_zero, "drop one unconditioned zero step");
    o_tab->callback([&] {
        const auto kind = okind == "vacillating" ? combinat::TableauKind::vacillating
                                                 : combinat::TableauKind::hesitating;
        const Sequence sh = parse_terms_list(oshape);
        if (sh.size() != 2) throw CLI::ValidationError("--shape needs two entries");
        json j;
        j["count"] = combinat::count_tableau_walks(
                         kind, on, 2,
                         {sh[0].convert_to<int>(), sh[1].convert_to<int>()}, oexclude_zero)
                         .str();
        emit(j);
    });

    auto* o_sst = oracle_cmd->add_subcommand("sst", "rectangular tableaux with given content");
    o_sst->add_option("--m", om, "columns of the 3-row rectangle")->required();
    o_sst->add_option("--content", ocontent, "comma-separated multiplicities")->capture_default_str();
    o_sst->callback([&] {
        std::vector<int> content;
        for (const auto& v : parse_terms_list(ocontent)) content.push_back(v.convert_to<int>());
        json j;
        j["count"] = combinat::count_rect_tableaux(om, content).str();
        emit(j);
    });

    auto* o_qs = oracle_cmd->add_subcommand("quadrant-sum", "multinomial-weighted tableau sums");
    o_qs->add_option("--variant", ovariant, "s0, s1a, s1b or s2")->capture_default_str();
    o_qs->add_option("--n", on, "index")->required();
    o_qs->callback([&] {
        combinat::QuadrantSumVariant v;
        if (ovariant == "s0") v = combinat::QuadrantSumVariant::s0;
        else if (ovariant == "s1a") v = combinat::QuadrantSumVariant::s1a;
        else if (ovariant == "s1b") v = combinat::QuadrantSumVariant::s1b;
        else if (ovariant == "s2") v = combinat::QuadrantSumVariant::s2;
        else throw CLI::ValidationError("unknown variant " + ovariant);
        json j;
        j["count"] = combinat::quadrant_sum(v, on).str();
        emit(j);
    });

    // branch
    auto* branch_cmd = app.add_subcommand("branch", "restriction-rule tools");
    branch_cmd->require_subcommand(1);
    int bd = 6, bk = 0, bp = 0, bq = 0, bn = 8, br = -1, bs = -1;

    auto* b_table = branch_cmd->add_subcommand("table", "expand the branching coefficients");
    b_table->add_option("--max-deg", bd, "truncation")->capture_default_str();
    b_table->add_option("--r", br, "restrict output to one (r,s) pair");
    b_table->add_option("--s", bs, "restrict output to one (r,s) pair");
    b_table->callback([&] {
        const auto table = branching::expand_branching_gf(bd);
        json obj = json::object();
        for (int r = 0; r <= bd; ++r) {
            if (br >= 0 && r != br) continue;
            for (int s = 0; s <= bd; ++s) {
                if (bs >= 0 && s != bs) continue;
                for (int p = 0; p <= bd; ++p)
                    for (int q = 0; q <= bd; ++q)
                        if (const auto v = table.at(r, s, p, q))
                            obj["(" + std::to_string(r) + "," + std::to_string(s) + ")->(" +
                                std::to_string(p) + "," + std::to_string(q) + ")"] = v;
            }
        }
        emit(obj);
    });

    auto* b_axis = branch_cmd->add_subcommand("verify-axis", "axis walks vs quadrant excursions");
    b_axis->add_option("--k", bk, "zero-step parameter")->capture_default_str();
    b_axis->add_option("--n", bn, "length bound")->capture_default_str();
    b_axis->callback([&] {
        const auto rep = branching::verify_axis_excursions(bk, bn);
        json j;
        j["ok"] = rep.ok;
        j["details"] = rep.detail;
        emit(j);
        if (!rep.ok) exit_code = 1;
    });

    auto* b_restrict = branch_cmd->add_subcommand("verify-restriction",
                                                  "endpoint counts vs branching-weighted sums");
    b_restrict->add_option("--k", bk, "zero-step parameter")->capture_default_str();
    b_restrict->add_option("--p", bp, "endpoint coordinate")->capture_default_str();
    b_restrict->add_option("--q", bq, "endpoint coordinate")->capture_default_str();
    b_restrict->add_option("--n", bn, "length bound")->capture_default_str();
    b_restrict->callback([&] {
        const auto rep = branching::verify_restriction(bk, bp, bq, bn);
        json j;
        j["ok"] = rep.ok;
        j["details"] = rep.detail;
        emit(j);
        if (!rep.ok) exit_code = 1;
    });

    // check
    checks::CheckOptions check_options;
    auto* check_cmd = app.add_subcommand("check", "run the regression suite");
    check_cmd->add_option("--only", check_options.only, "substring filter on check names");
    check_cmd->add_option("--inject-fault", check_options.inject_fault,
                          "test mode: force the named check to fail");
    check_cmd->callback([&] { exit_code = run_check(check_options); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
