#include "qpath/verify.hpp"

#include <algorithm>

namespace qpath {

std::string VerifyResult::message() const {
    std::string out;
    for (auto& p : problems) {
        if (!out.empty()) out += "; ";
        out += p;
    }
    return out.empty() ? "ok" : out;
}

VerifyResult verify_covering(const Instance& inst, const Covering& c) {
    VerifyResult r;
    if ((int)c.size() != (int)inst.pairs.pairs.size()) {
        r.fail("path count " + std::to_string(c.size()) + " != pair count " +
               std::to_string(inst.pairs.pairs.size()));
        return r;
    }
    std::vector<Vertex> all;
    std::vector<VertexPair> ends;
    for (size_t i = 0; i < c.size(); ++i) {
        const Path& p = c[i];
        if (p.start.dim != inst.n) {
            r.fail("path " + std::to_string(i) + ": wrong dimension");
            return r;
        }
        if (p.word.empty()) {
            r.fail("path " + std::to_string(i) + ": zero length (endpoints coincide)");
            continue;
        }
        if (!is_simple(p)) r.fail("path " + std::to_string(i) + ": not simple");
        for (auto& v : path_vertices(p)) {
            if (inst.fault.contains(v))
                r.fail("path " + std::to_string(i) + " visits deleted vertex " + v.str());
            all.push_back(v);
        }
        ends.emplace_back(p.start, endpoint(p));
    }
    if (!r.ok) return r;
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        r.fail("paths are not vertex-disjoint");
    long long want = (1LL << inst.n) - inst.fault.mass();
    if ((long long)all.size() != want)
        r.fail("covers " + std::to_string(all.size()) + " vertices, wants " +
               std::to_string(want));
    std::sort(ends.begin(), ends.end());
    if (ends != inst.pairs.pairs) r.fail("endpoint pairs differ from prescription");
    return r;
}

VerifyResult verify_cycle(int n, const Fault& fault, const Path& cycle) {
    VerifyResult r;
    if (cycle.start.dim != n) {
        r.fail("wrong dimension");
        return r;
    }
    if (!is_cycle(cycle)) {
        r.fail("not a cycle");
        return r;
    }
    auto vs = path_vertices(cycle);
    vs.pop_back(); // closing vertex repeats the start
    for (auto& v : vs)
        if (fault.contains(v)) r.fail("cycle visits deleted vertex " + v.str());
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        r.fail("cycle repeats a vertex");
    long long want = (1LL << n) - fault.mass();
    if ((long long)vs.size() != want)
        r.fail("cycle covers " + std::to_string(vs.size()) + " vertices, wants " +
               std::to_string(want));
    return r;
}

} // namespace qpath
