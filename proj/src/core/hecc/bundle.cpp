#include "hecc/bundle.hpp"

#include <sstream>

namespace hecc {

Bundle::Bundle(Divisor rep)
    : node_(Node::Line), curve_(rep.curve()), rep_(std::move(rep)) {}

Bundle::Bundle(CurvePtr curve, std::vector<BundlePtr> parts)
    : node_(Node::Sum), curve_(std::move(curve)), rep_(Divisor::zero(curve_)),
      parts_(std::move(parts)) {}

Bundle::Bundle(CurvePtr curve, H1Class cls, BundlePtr sub, BundlePtr quot)
    : node_(Node::Ext), curve_(std::move(curve)), rep_(Divisor::zero(curve_)),
      parts_{std::move(sub), std::move(quot)},
      cls_(std::make_shared<H1Class>(std::move(cls))) {}

BundlePtr Bundle::line(Divisor rep) {
    return BundlePtr(new Bundle(std::move(rep)));
}

BundlePtr Bundle::direct_sum(std::vector<BundlePtr> parts) {
    if (parts.empty()) throw ContractViolation("empty direct sum");
    const CurvePtr& c = parts.front()->curve();
    for (const auto& p : parts)
        if (!p->curve()->same_curve(*c)) throw ContractViolation("sum across curves");
    return BundlePtr(new Bundle(c, std::move(parts)));
}

BundlePtr Bundle::ext(H1Class cls, BundlePtr sub, BundlePtr quot) {
    const CurvePtr& c = sub->curve();
    if (!quot->curve()->same_curve(*c)) throw ContractViolation("extension across curves");
    if (sub->rank() == 1 && quot->rank() == 1) {
        // the class lives in H^1(Hom(quot, sub)) = H^1(O(det sub - det quot))
        if (cls.ambient() != sub->determinant() - quot->determinant())
            throw ContractViolation("extension class over the wrong divisor");
    }
    return BundlePtr(new Bundle(c, std::move(cls), std::move(sub), std::move(quot)));
}

const Divisor& Bundle::line_rep() const {
    if (node_ != Node::Line) throw ContractViolation("line_rep on a non-line node");
    return rep_;
}

const std::vector<BundlePtr>& Bundle::summands() const {
    if (node_ != Node::Sum) throw ContractViolation("summands on a non-sum node");
    return parts_;
}

const H1Class& Bundle::ext_class() const {
    if (node_ != Node::Ext) throw ContractViolation("ext_class on a non-extension node");
    return *cls_;
}

const BundlePtr& Bundle::sub() const {
    if (node_ != Node::Ext) throw ContractViolation("sub on a non-extension node");
    return parts_[0];
}

const BundlePtr& Bundle::quot() const {
    if (node_ != Node::Ext) throw ContractViolation("quot on a non-extension node");
    return parts_[1];
}

int Bundle::rank() const {
    switch (node_) {
    case Node::Line: return 1;
    default: {
        int r = 0;
        for (const auto& p : parts_) r += p->rank();
        return r;
    }
    }
}

long Bundle::degree() const {
    switch (node_) {
    case Node::Line: return rep_.degree();
    default: {
        long d = 0;
        for (const auto& p : parts_) d += p->degree();
        return d;
    }
    }
}

Divisor Bundle::determinant() const {
    switch (node_) {
    case Node::Line: return rep_;
    default: {
        Divisor d = Divisor::zero(curve_);
        for (const auto& p : parts_) d = d + p->determinant();
        return d;
    }
    }
}

BundlePtr Bundle::child(size_t i) const {
    if (i >= parts_.size()) throw ContractViolation("bundle child index out of range");
    return parts_[i];
}

size_t Bundle::child_count() const { return parts_.size(); }

bool is_split(const Bundle& e) {
    if (e.node() != Bundle::Node::Ext) throw ContractViolation("is_split on a non-extension");
    return is_zero_class(e.ext_class()).zero;
}

const char* flatness_name(Flatness f) {
    switch (f) {
    case Flatness::Flat: return "Flat";
    case Flatness::NotFlat: return "NotFlat";
    default: return "Unknown";
    }
}

namespace {

std::string join_path(const std::string& base, size_t i) {
    return base.empty() ? std::to_string(i) : base + "." + std::to_string(i);
}

struct Engine {
    std::vector<TraceStep>& trace;
    std::string unknown_reason;

    void emit(const char* rule, const std::string& path, const char* anchor,
              std::map<std::string, std::string> facts) {
        trace.push_back(TraceStep{rule, path, anchor, std::move(facts)});
    }

    Flatness children_of_sum(const Bundle& b, const std::string& path) {
        // shared by genuine sums and split-reduced extensions
        bool all_flat = true;
        for (size_t i = 0; i < b.child_count(); ++i) {
            const Flatness v = eval(*b.child(i), join_path(path, i));
            if (v == Flatness::NotFlat) {
                emit("R3", path, "direct summand obstruction (Atiyah-Weil)",
                     {{"summand", std::to_string(i)},
                      {"summand_degree", std::to_string(b.child(i)->degree())}});
                return Flatness::NotFlat;
            }
            if (v != Flatness::Flat) all_flat = false;
        }
        if (all_flat) {
            emit("R4", path, "direct sum of flat bundles",
                 {{"summands", std::to_string(b.child_count())}});
            return Flatness::Flat;
        }
        unknown_reason = "no rule applies (a summand verdict is Unknown)";
        return Flatness::Unknown;
    }

    Flatness eval(const Bundle& b, const std::string& path) {
        const long deg = b.degree();
        if (deg != 0) {
            emit("R1", path, "degree obstruction (Atiyah-Weil)",
                 {{"degree", std::to_string(deg)}, {"rank", std::to_string(b.rank())}});
            return Flatness::NotFlat;
        }
        switch (b.node()) {
        case Bundle::Node::Line:
            emit("R2", path, "degree-zero line bundle", {{"degree", "0"}});
            return Flatness::Flat;
        case Bundle::Node::Sum:
            return children_of_sum(b, path);
        case Bundle::Node::Ext: {
            const bool zero = is_zero_class(b.ext_class()).zero;
            if (zero) {
                emit("R5", path, "split extension reduction", {{"ext_class", "zero"}});
                return children_of_sum(b, path);
            }
            const long sub_deg = b.sub()->degree();
            if (b.rank() == 2 && sub_deg > 0) {
                emit("R6", path, "nonsplit rank-2 of degree 0 with positive-degree subline",
                     {{"ext_class", "nonzero"},
                      {"sub_degree", std::to_string(sub_deg)},
                      {"rank", "2"},
                      {"degree", "0"}});
                return Flatness::Flat;
            }
            unknown_reason = "no rule applies (nonsplit extension outside R6)";
            return Flatness::Unknown;
        }
        }
        throw InternalError("unreachable bundle node");
    }
};

const Bundle& locate(const Bundle& root, const std::string& path) {
    if (path.empty()) return root;
    const Bundle* cur = &root;
    size_t pos = 0;
    while (pos < path.size()) {
        size_t dot = path.find('.', pos);
        if (dot == std::string::npos) dot = path.size();
        const size_t idx = static_cast<size_t>(std::stoul(path.substr(pos, dot - pos)));
        cur = cur->child(idx).get();
        pos = dot + 1;
    }
    return *cur;
}

} // namespace

FlatnessVerdict is_flat(const Bundle& b) {
    FlatnessVerdict out;
    Engine eng{out.trace, {}};
    out.verdict = eng.eval(b, "");
    if (out.verdict == Flatness::Unknown) {
        out.unknown_reason = eng.unknown_reason.empty() ? "no rule applies" : eng.unknown_reason;
    }
    return out;
}

Flatness replay_trace(const Bundle& root, const std::vector<TraceStep>& trace) {
    if (trace.empty()) throw InternalError("replay of an empty trace");
    std::map<std::string, Flatness> verdicts;
    const auto fact = [](const TraceStep& s, const char* key) -> const std::string& {
        auto it = s.facts.find(key);
        if (it == s.facts.end()) throw InternalError("trace step missing fact");
        return it->second;
    };

    for (const TraceStep& s : trace) {
        const Bundle& b = locate(root, s.node);
        if (s.rule == "R1") {
            if (b.degree() == 0 || std::to_string(b.degree()) != fact(s, "degree"))
                throw InternalError("R1 replay mismatch");
            verdicts[s.node] = Flatness::NotFlat;
        } else if (s.rule == "R2") {
            if (b.node() != Bundle::Node::Line || b.degree() != 0)
                throw InternalError("R2 replay mismatch");
            verdicts[s.node] = Flatness::Flat;
        } else if (s.rule == "R3") {
            const std::string child = join_path(s.node, std::stoul(fact(s, "summand")));
            auto it = verdicts.find(child);
            if (it == verdicts.end() || it->second != Flatness::NotFlat)
                throw InternalError("R3 replay: cited summand is not NotFlat");
            verdicts[s.node] = Flatness::NotFlat;
        } else if (s.rule == "R4") {
            for (size_t i = 0; i < b.child_count(); ++i) {
                auto it = verdicts.find(join_path(s.node, i));
                if (it == verdicts.end() || it->second != Flatness::Flat)
                    throw InternalError("R4 replay: summand not Flat");
            }
            verdicts[s.node] = Flatness::Flat;
        } else if (s.rule == "R5") {
            if (b.node() != Bundle::Node::Ext || !is_zero_class(b.ext_class()).zero)
                throw InternalError("R5 replay: class does not vanish");
            // conclusion comes from later R3/R4 at the same node
        } else if (s.rule == "R6") {
            if (b.node() != Bundle::Node::Ext || b.rank() != 2 || b.degree() != 0 ||
                b.sub()->degree() <= 0 || is_zero_class(b.ext_class()).zero)
                throw InternalError("R6 replay mismatch");
            verdicts[s.node] = Flatness::Flat;
        } else {
            throw InternalError("unknown rule in trace: " + s.rule);
        }
    }
    auto it = verdicts.find("");
    if (it == verdicts.end()) throw InternalError("trace does not conclude at the root");
    return it->second;
}

} // namespace hecc
