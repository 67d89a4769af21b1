#include "qpath/json.hpp"

namespace qpath {

using nlohmann::json;

json to_json(const Path& p) {
    return json{{"start", p.start.str()}, {"word", p.word}};
}

json to_json(const Covering& c) {
    json a = json::array();
    for (auto& p : c) a.push_back(to_json(p));
    return a;
}

json to_json(const Instance& inst) {
    json fault = json::array();
    for (auto& v : inst.fault.vertices) fault.push_back(v.str());
    json pairs = json::array();
    for (auto& p : inst.pairs.pairs) pairs.push_back(json{p.a.str(), p.b.str()});
    return json{{"n", inst.n}, {"fault", fault}, {"pairs", pairs}};
}

json to_json(const Signature& s) {
    return json{{"M", s.M}, {"C", s.C}, {"N", s.N}, {"O", s.O}};
}

json to_json(const TraceNode& t) {
    json kids = json::array();
    for (auto& c : t.children) kids.push_back(to_json(c));
    return json{{"lemma", t.lemma}, {"axis", t.axis}, {"label", t.label},
                {"children", kids}};
}

json to_json(const SolveOutcome& o) {
    const char* status = "unknown";
    switch (o.status) {
        case Status::Solved: status = "solved"; break;
        case Status::InfeasibleCertified: status = "infeasible"; break;
        case Status::BelowThreshold: status = "below_threshold"; break;
        case Status::Unknown: status = "unknown"; break;
    }
    json j{{"status", status}, {"evidence", o.evidence}};
    if (o.covering) j["covering"] = to_json(*o.covering);
    if (o.trace) j["trace"] = to_json(*o.trace);
    return j;
}

Path path_from_json(const json& j) {
    Path p;
    p.start = Vertex::parse(j.at("start").get<std::string>());
    p.word = j.at("word").get<Word>();
    for (Letter l : p.word)
        if (l < 1 || l > p.start.dim) throw RangeError("letter out of range");
    return p;
}

Covering covering_from_json(const json& j) {
    if (!j.is_array()) throw RangeError("expected a covering array");
    Covering c;
    for (auto& e : j) c.push_back(path_from_json(e));
    return c;
}

Instance instance_from_json(const json& j) {
    int n = j.at("n").get<int>();
    if (n < 1 || n > kMaxDim) throw RangeError("dimension out of range");
    std::vector<Vertex> fv;
    for (auto& s : j.at("fault")) fv.push_back(Vertex::parse(s.get<std::string>()));
    std::vector<VertexPair> pv;
    for (auto& p : j.at("pairs"))
        pv.emplace_back(Vertex::parse(p.at(0).get<std::string>()),
                        Vertex::parse(p.at(1).get<std::string>()));
    return Instance(n, Fault(n, std::move(fv)), PairSet(n, std::move(pv)));
}

Signature signature_from_json(const json& j) {
    return Signature{j.at("M").get<int>(), j.at("C").get<int>(), j.at("N").get<int>(),
                     j.at("O").get<int>()};
}

} // namespace qpath
