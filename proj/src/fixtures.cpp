#include "hfk/fixtures.hpp"

#include <sstream>

#include "hfk/errors.hpp"
#include "json.hpp"

namespace hfk {

namespace {

using nlohmann::json;

json poly_to_json_obj(const BigradedPoly& p) {
    json arr = json::array();
    for (const auto& [key, dim] : p.terms)
        arr.push_back({{"a", key.first}, {"m", key.second}, {"dim", dim}});
    return arr;
}

BigradedPoly poly_from_json_obj(const json& arr) {
    if (!arr.is_array()) throw ValidationError("polynomial JSON must be an array");
    BigradedPoly p;
    for (const auto& term : arr) {
        long long dim = term.at("dim").get<long long>();
        if (dim < 0) throw ValidationError("negative dimension in polynomial JSON");
        p.add(term.at("a").get<int>(), term.at("m").get<int>(), dim);
    }
    return p;
}

json grid_to_json_obj(const GridDiagram& g) {
    return {{"n", g.n}, {"x", g.x_rows}, {"o", g.o_rows}};
}

GridDiagram grid_from_json_obj(const json& obj) {
    GridDiagram g;
    g.n = obj.at("n").get<int>();
    g.x_rows = obj.at("x").get<std::vector<int>>();
    g.o_rows = obj.at("o").get<std::vector<int>>();
    require_valid(g);
    return g;
}

} // namespace

std::string poly_to_json(const BigradedPoly& p) { return poly_to_json_obj(p).dump(); }

BigradedPoly poly_from_json(const std::string& text) {
    return poly_from_json_obj(json::parse(text));
}

std::vector<FixtureRecord> parse_fixtures(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("fixture JSON parse error: ") + e.what());
    }
    if (!root.is_array()) throw ValidationError("fixture file must be a JSON array");
    std::vector<FixtureRecord> records;
    try {
        for (const auto& obj : root) {
            FixtureRecord rec;
            rec.name = obj.at("name").get<std::string>();
            if (obj.contains("grid") && !obj.at("grid").is_null())
                rec.grid = grid_from_json_obj(obj.at("grid"));
            rec.hfk = poly_from_json_obj(obj.at("hfk"));
            if (obj.contains("tau") && !obj.at("tau").is_null())
                rec.tau = obj.at("tau").get<int>();
            if (obj.contains("e2") && !obj.at("e2").is_null())
                rec.e2 = poly_from_json_obj(obj.at("e2"));
            records.push_back(std::move(rec));
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("fixture JSON schema error: ") + e.what());
    }
    return records;
}

std::string serialize_fixtures(const std::vector<FixtureRecord>& records) {
    json root = json::array();
    for (const auto& rec : records) {
        json obj;
        obj["name"] = rec.name;
        obj["grid"] = rec.grid ? grid_to_json_obj(*rec.grid) : json(nullptr);
        obj["hfk"] = poly_to_json_obj(rec.hfk);
        obj["tau"] = rec.tau ? json(*rec.tau) : json(nullptr);
        obj["e2"] = rec.e2 ? poly_to_json_obj(*rec.e2) : json(nullptr);
        root.push_back(std::move(obj));
    }
    return root.dump(2) + "\n";
}

std::string poly_diff(const BigradedPoly& expected, const BigradedPoly& actual) {
    std::ostringstream out;
    for (const auto& [key, dim] : expected.terms) {
        long long got = actual.at(key.first, key.second);
        if (got != dim)
            out << " (a=" << key.first << ",m=" << key.second << "): expected " << dim << ", got "
                << got << ";";
    }
    for (const auto& [key, dim] : actual.terms) {
        if (expected.at(key.first, key.second) == 0)
            out << " (a=" << key.first << ",m=" << key.second << "): unexpected " << dim << ";";
    }
    return out.str();
}

VerifyRow verify_fixture(const FixtureRecord& rec, bool allow_mirror) {
    VerifyRow row;
    row.name = rec.name;
    if (!rec.grid) {
        row.status = VerifyStatus::Skip;
        row.detail = "no grid recorded";
        return row;
    }

    ComputeOptions opts;
    opts.want_tau = rec.tau.has_value();
    opts.want_e2 = rec.e2.has_value();
    HfkResult result = compute_hfk(*rec.grid, opts);

    bool mirrored = false;
    if (result.hfk != rec.hfk) {
        if (allow_mirror && mirror_transform(result.hfk) == rec.hfk) {
            mirrored = true;
        } else {
            row.status = VerifyStatus::Fail;
            row.detail = "hfk mismatch:" + poly_diff(rec.hfk, result.hfk);
            return row;
        }
    }

    if (rec.tau) {
        if (!result.tau || !result.tau->determinate()) {
            row.status = VerifyStatus::Fail;
            row.detail = "tau indeterminate: " + (result.tau ? result.tau->reason : "missing");
            return row;
        }
        int got = *result.tau->value;
        if (mirrored) got = -got;
        if (got != *rec.tau) {
            row.status = VerifyStatus::Fail;
            row.detail = "tau mismatch: expected " + std::to_string(*rec.tau) + ", got " +
                         std::to_string(got);
            return row;
        }
    }

    if (rec.e2) {
        BigradedPoly got = result.e2 ? *result.e2 : BigradedPoly{};
        if (mirrored) got = reverse_bigrading(got);
        if (got != *rec.e2) {
            row.status = VerifyStatus::Fail;
            row.detail = "e2 mismatch:" + poly_diff(*rec.e2, got);
            return row;
        }
    }

    row.status = VerifyStatus::Pass;
    row.detail = mirrored ? "matched after mirror transform" : "";
    return row;
}

} // namespace hfk
