#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "eqeuler/bredon.hpp"
#include "eqeuler/builtin.hpp"
#include "eqeuler/errors.hpp"
#include "eqeuler/json_io.hpp"

namespace {

using namespace eqeuler;

constexpr const char* kVersion = "0.1.0";

int group_cap() {
    if (const char* env = std::getenv("EQEULER_GROUP_CAP")) {
        int cap = std::atoi(env);
        check(cap >= 1, err::InvalidInput, "EQEULER_GROUP_CAP must be positive");
        return cap;
    }
    return kDefaultOrderCap;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    check(in.good(), err::InvalidInput, "cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(err::InvalidInput, "malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

Json read_json_stdin() {
    Json j;
    try {
        std::cin >> j;
    } catch (const std::exception& e) {
        fail(err::InvalidInput, std::string("malformed JSON on stdin: ") + e.what());
    }
    return j;
}

// Group and complex from two file paths, or a combined object on stdin.
struct LoadedPair {
    Json group_json;
    Json complex_json;
    FiniteGroup group;
    GComplex complex;
};

LoadedPair load_pair(const std::string& group_path, const std::string& complex_path) {
    LoadedPair p;
    if (group_path.empty()) {
        Json combined = read_json_stdin();
        check(combined.contains("group") && combined.contains("complex"), err::InvalidInput,
              "combined input needs 'group' and 'complex'");
        p.group_json = combined["group"];
        p.complex_json = combined["complex"];
    } else {
        check(!complex_path.empty(), err::InvalidInput, "missing complex JSON path");
        p.group_json = read_json_file(group_path);
        p.complex_json = read_json_file(complex_path);
    }
    p.group = parse_group(p.group_json, group_cap());
    p.complex = parse_complex(p.complex_json, p.group);
    return p;
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        check(out.good(), err::InvalidInput, "cannot write " + out_path);
        out << j.dump(2) << "\n";
    }
}

Json verify_to_json(const VerifyReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return Json{{"all_pass", r.all_pass()}, {"checks", std::move(checks)}};
}

Json class_order_json(const Int& order) {
    if (order == 0) return "infinite";
    return int_to_ll(order);
}

int cmd_group_info(const std::string& path, const std::string& out_path) {
    Json gj = read_json_file(path);
    FiniteGroup g = parse_group(gj, group_cap());
    SubgroupClassTable classes = subgroup_classes(g);
    Json j;
    j["version"] = kVersion;
    j["input_fingerprint"] = fingerprint(gj);
    j["degree"] = g.degree;
    j["order"] = g.order();
    j["exponent"] = g.exponent();
    j["abelian"] = g.is_abelian();
    j["subgroups"] = classes.subgroups.size();
    Json cls = Json::array();
    for (const auto& c : classes.classes)
        cls.push_back(Json{{"order", c.rep.order()},
                           {"size", c.subgroup_idxs.size()},
                           {"representative", c.rep.members}});
    j["subgroup_classes"] = std::move(cls);
    for (FieldTag f : {FieldTag::Q, FieldTag::R, FieldTag::C})
        j["conjugacy_classes"][field_name(f)] = f_conjugacy_classes(g, f).count();
    emit(j, out_path);
    return 0;
}

int cmd_reps(const std::string& path, const std::string& field,
             const std::string& out_path, bool strict) {
    Json gj = read_json_file(path);
    FiniteGroup g = parse_group(gj, group_cap());
    FieldTag f = field_from_string(field);
    RepUniverse u(g, SchurPolicy{strict});
    const RepTheory& t = *u.ambient_theory();

    Json j;
    j["version"] = kVersion;
    j["input_fingerprint"] = fingerprint(gj);
    j["field"] = field_name(f);
    j["conductor"] = t.table.conductor;
    Json cls = Json::array();
    for (const auto& c : t.table.classes.classes) cls.push_back(c);
    j["conjugacy_classes"] = std::move(cls);
    Json irr = Json::array();
    for (int i = 0; i < t.irr_count(f); ++i) {
        Json one;
        one["degree"] = int_to_ll(t.irr_degree(f, i));
        if (f == FieldTag::R) one["type"] = std::string(1, t.real_irr[i].type);
        if (f == FieldTag::Q) one["schur_index"] = t.rat_irr[i].schur_index;
        Json vals = Json::array();
        for (int c = 0; c < t.table.classes.count(); ++c)
            vals.push_back(cyclotomic_to_json(t.irr_value(f, i, c)));
        one["values"] = std::move(vals);
        irr.push_back(std::move(one));
    }
    j["irreducibles"] = std::move(irr);
    emit(j, out_path);
    return 0;
}

int cmd_marks(const std::string& path, const std::string& out_path) {
    Json gj = read_json_file(path);
    FiniteGroup g = parse_group(gj, group_cap());
    RepUniverse u(g);
    SubgroupClassTable classes = subgroup_classes(g);
    TableOfMarks marks = table_of_marks(g, classes);

    Json j;
    j["version"] = kVersion;
    j["input_fingerprint"] = fingerprint(gj);
    Json cls = Json::array();
    for (const auto& c : classes.classes)
        cls.push_back(Json{{"order", c.rep.order()}, {"representative", c.rep.members}});
    j["subgroup_classes"] = std::move(cls);
    j["table_of_marks"] = int_mat_to_json(marks.entries);
    IntMat jm;
    for (size_t b = 0; b < classes.classes.size(); ++b) {
        BurnsideElement a{IntVec(classes.classes.size(), Int(0))};
        a.coeffs[b] = 1;
        jm.push_back(j1(u, classes, a).coeffs);
    }
    j["j1_matrix"] = int_mat_to_json(jm);
    emit(j, out_path);
    return 0;
}

int cmd_category(const std::string& gpath, const std::string& xpath,
                 const std::string& out_path) {
    LoadedPair p = load_pair(gpath, xpath);
    GComplex x = validate_and_subdivide(std::move(p.complex));
    FixedData fd = fixed_data(x);
    ComponentCategory cat = component_category(x, fd);

    Json j;
    j["version"] = kVersion;
    j["inputs"] = Json{{"group", fingerprint(p.group_json)},
                       {"complex", fingerprint(p.complex_json)}};
    Json objs = Json::array();
    for (const auto& o : cat.objects)
        objs.push_back(Json{{"subgroup_class", o.class_idx},
                            {"subgroup_order",
                             fd.classes.classes[o.class_idx].rep.order()},
                            {"component", o.component},
                            {"basepoint", o.basepoint}});
    j["objects"] = std::move(objs);
    int n = static_cast<int>(cat.objects.size());
    Json card = Json::array();
    for (int yi = 0; yi < n; ++yi) {
        Json row = Json::array();
        for (int xi = 0; xi < n; ++xi) row.push_back(mor_set(cat, yi, xi).size());
        card.push_back(std::move(row));
    }
    j["mor_cardinalities"] = std::move(card);
    RatMat ch = char_map_matrix(cat);
    Json chj = Json::array();
    for (const RatVec& row : ch) chj.push_back(rat_vec_to_json(row));
    j["character_map"] = std::move(chj);
    emit(j, out_path);
    return 0;
}

// Shared pipeline for euler and verify.
int run_euler(const std::string& gpath, const std::string& xpath,
              const std::string& field, const std::string& out_path, bool strict,
              bool report_out) {
    LoadedPair p = load_pair(gpath, xpath);
    FieldTag f = field_from_string(field);
    check(f != FieldTag::C, err::InvalidInput, "euler supports fields Q and R");

    GComplex x = validate_and_subdivide(std::move(p.complex));
    RepUniverse u(p.group, SchurPolicy{strict});
    FixedData fd = fixed_data(x);
    ComponentCategory cat = component_category(x, fd);
    UGBasis basis = ug_basis(fd);
    UGElement chi = universal_euler_char(x, fd, basis);
    RatMat ch = char_map_matrix(cat);
    H0Presentation pq = h0_presentation(u, cat, FieldTag::Q);
    H0Presentation pr = h0_presentation(u, cat, FieldTag::R);
    H0Class c1 = e1(pq, chi);
    H0Class c2 = apply_e2(build_e2(pq, pr), c1);
    BurnsideElement cstar = pushforward_to_point(fd, basis, chi);
    VerifyReport verify = verify_suite(u, x, fd, cat, pq, pr);

    Json j;
    j["version"] = kVersion;
    j["field"] = field_name(f);
    j["inputs"] = Json{{"group", fingerprint(p.group_json)},
                       {"complex", fingerprint(p.complex_json)}};
    j["group"] = Json{{"order", u.ambient().order()},
                      {"exponent", u.ambient().exponent()},
                      {"subgroup_classes", fd.classes.classes.size()}};
    j["complex"] = Json{{"vertices", x.nverts},
                        {"dimension", x.top_dim()},
                        {"total_simplices", x.total_simplices()},
                        {"euler_characteristic", int_to_ll(x.euler_char())}};

    Json objs = Json::array();
    for (size_t i = 0; i < cat.objects.size(); ++i) {
        const auto& o = cat.objects[i];
        const auto& cd = fd.per_class[o.class_idx];
        std::vector<Perm> acting;
        for (int w : cd.comp_isotropy[o.component])
            acting.push_back(x.action[cd.weyl.coset_rep[w]]);
        SimplexMask cm = component_mask(x, cd.in_fixed, cd.comps, o.component);
        objs.push_back(Json{
            {"subgroup_class", o.class_idx},
            {"subgroup_order", fd.classes.classes[o.class_idx].rep.order()},
            {"component", o.component},
            {"orbit_size", fd.per_class[o.class_idx].orbits[o.orbit].size()},
            {"orbifold_euler_characteristic",
             rat_to_string(orbifold_euler_char_masked(x, cm, acting))}});
    }
    j["objects"] = std::move(objs);

    j["chi_g"] = int_vec_to_json(chi.coeffs);
    j["ch_of_chi"] = rat_vec_to_json(char_map_apply(ch, chi));
    j["c_star"] = int_vec_to_json(cstar.coeffs);

    j["h0_q"] = Json{{"free_rank", pq.pres.free_rank()},
                     {"torsion", int_vec_to_json(pq.pres.torsion_factors())}};
    j["h0_r"] = Json{{"free_rank", pr.pres.free_rank()},
                     {"torsion", int_vec_to_json(pr.pres.torsion_factors())}};
    j["e1"] = Json{{"coords", int_vec_to_json(c1.coords)},
                   {"normal_form", int_vec_to_json(pq.pres.normal_form(c1.coords))},
                   {"order", class_order_json(element_order(pq, c1))}};
    j["e2"] = Json{{"coords", int_vec_to_json(c2.coords)},
                   {"normal_form", int_vec_to_json(pr.pres.normal_form(c2.coords))},
                   {"order", class_order_json(element_order(pr, c2))}};
    j["class_order"] = f == FieldTag::R ? class_order_json(element_order(pr, c2))
                                        : class_order_json(element_order(pq, c1));
    j["verify"] = verify_to_json(verify);
    j["note"] =
        "class orders are computed in Bredon H0 with representation-ring "
        "coefficients; the KO-homology Euler class is the image of e2(e1(chi)) "
        "under a further comparison map and is not computed here";

    if (report_out) emit(j, out_path);
    return verify.all_pass() ? 0 : 2;
}

int cmd_builtin(const std::string& name, const std::string& spec_path,
                const std::string& out_path) {
    FiniteGroup g;
    GComplex x;
    if (name == "s3-sphere3") {
        g = s3_group();
        x = builtin_s3_sphere3();
    } else if (name == "s3-sphere5") {
        g = s3_group();
        x = builtin_s3_sphere5();
    } else if (name == "rep-sphere") {
        check(!spec_path.empty(), err::InvalidInput,
              "rep-sphere needs a spec JSON path");
        Json spec = read_json_file(spec_path);
        check(spec.contains("group") && spec.contains("pieces"), err::InvalidInput,
              "rep-sphere spec needs 'group' and 'pieces'");
        g = parse_group(spec["group"], group_cap());
        std::vector<RepPiece> pieces;
        for (const Json& pj : spec["pieces"]) {
            RepPiece piece;
            std::string type = pj.value("type", "");
            if (type == "trivial_line") {
                piece.kind = RepPiece::Kind::TrivialLine;
            } else if (type == "sign_line") {
                piece.kind = RepPiece::Kind::SignLine;
                for (const auto& s : pj.at("signs")) piece.signs.push_back(s.get<int>());
            } else if (type == "rotation_plane") {
                piece.kind = RepPiece::Kind::RotationPlane;
                piece.modulus = pj.at("modulus").get<int>();
                for (const auto& a : pj.at("amounts"))
                    piece.amounts.push_back(a.get<int>());
            } else if (type == "dihedral_plane") {
                piece.kind = RepPiece::Kind::DihedralPlane;
                piece.ngon = pj.at("ngon").get<int>();
                for (const auto& img : pj.at("images")) {
                    std::vector<int32_t> v;
                    for (const auto& e : img) v.push_back(e.get<int32_t>());
                    piece.vertex_images.emplace_back(std::move(v));
                }
            } else {
                fail(err::InvalidInput, "unknown piece type '" + type + "'");
            }
            pieces.push_back(std::move(piece));
        }
        x = rep_sphere(g, pieces);
    } else {
        fail(err::InvalidInput, "unknown builtin '" + name +
                                    "' (expected s3-sphere3, s3-sphere5 or rep-sphere)");
    }
    Json j;
    j["group"] = group_to_json(g);
    j["complex"] = complex_to_json(x);
    emit(j, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equivariant Euler characteristics over finite groups"};
    app.require_subcommand(1);

    std::string gpath, xpath, out_path, field = "R", builtin_name, spec_path;
    bool strict = false;

    auto* cgroup = app.add_subcommand("group", "group order, subgroup classes, conjugacy data");
    cgroup->add_option("group", gpath, "group JSON path")->required();
    cgroup->add_option("--out", out_path, "write the report to a file");

    auto* creps = app.add_subcommand("reps", "representation theory tables");
    auto* ctable = creps->add_subcommand("table", "irreducible character table");
    ctable->add_option("group", gpath, "group JSON path")->required();
    ctable->add_option("--field", field, "C, R or Q")->default_val("C");
    ctable->add_flag("--strict-schur", strict, "fail on uncertain Schur indices");
    ctable->add_option("--out", out_path, "write the report to a file");
    creps->require_subcommand(1);

    auto* cmarks = app.add_subcommand("marks", "table of marks and the j1 matrix");
    cmarks->add_option("group", gpath, "group JSON path")->required();
    cmarks->add_option("--out", out_path, "write the report to a file");

    auto* ccat = app.add_subcommand("category", "component category and character map");
    ccat->add_option("group", gpath, "group JSON path");
    ccat->add_option("complex", xpath, "complex JSON path");
    ccat->add_option("--out", out_path, "write the report to a file");

    auto* ceuler = app.add_subcommand("euler", "equivariant Euler characteristic report");
    ceuler->add_option("group", gpath, "group JSON path");
    ceuler->add_option("complex", xpath, "complex JSON path");
    ceuler->add_option("--field", field, "R or Q")->default_val("R");
    ceuler->add_flag("--strict-schur", strict, "fail on uncertain Schur indices");
    ceuler->add_option("--out", out_path, "write the report to a file");

    auto* cverify = app.add_subcommand("verify", "run the exact verification suite");
    cverify->add_option("group", gpath, "group JSON path");
    cverify->add_option("complex", xpath, "complex JSON path");
    cverify->add_option("--out", out_path, "write the report to a file");

    auto* cbuiltin = app.add_subcommand("builtin", "emit a built-in example");
    cbuiltin->add_option("name", builtin_name, "s3-sphere3, s3-sphere5 or rep-sphere")
        ->required();
    cbuiltin->add_option("spec", spec_path, "rep-sphere spec JSON path");
    cbuiltin->add_option("--out", out_path, "write the output to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cgroup->parsed()) return cmd_group_info(gpath, out_path);
        if (creps->parsed()) return cmd_reps(gpath, field, out_path, strict);
        if (cmarks->parsed()) return cmd_marks(gpath, out_path);
        if (ccat->parsed()) return cmd_category(gpath, xpath, out_path);
        if (ceuler->parsed())
            return run_euler(gpath, xpath, field, out_path, strict, true);
        if (cverify->parsed()) {
            LoadedPair p = load_pair(gpath, xpath);
            GComplex x = validate_and_subdivide(std::move(p.complex));
            RepUniverse u(p.group, SchurPolicy{false});
            FixedData fd = fixed_data(x);
            ComponentCategory cat = component_category(x, fd);
            H0Presentation pq = h0_presentation(u, cat, FieldTag::Q);
            H0Presentation pr = h0_presentation(u, cat, FieldTag::R);
            VerifyReport r = verify_suite(u, x, fd, cat, pq, pr);
            Json j;
            j["version"] = kVersion;
            j["inputs"] = Json{{"group", fingerprint(p.group_json)},
                               {"complex", fingerprint(p.complex_json)}};
            j["verify"] = verify_to_json(r);
            emit(j, out_path);
            return r.all_pass() ? 0 : 2;
        }
        if (cbuiltin->parsed()) return cmd_builtin(builtin_name, spec_path, out_path);
    } catch (const EqError& e) {
        Json err = Json{{"code", e.code()}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json err = Json{{"code", "Internal"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 1;
}
