#ifndef HECC_BUNDLE_HPP
#define HECC_BUNDLE_HPP

#include <map>

#include "hecc/h1.hpp"

namespace hecc {

class Bundle;
using BundlePtr = std::shared_ptr<const Bundle>;

// Symbolic vector bundle: line bundles O(A) with an explicit divisor
// representative, direct sums, and extensions classified by an H^1 class
// over Hom(quot, sub). Immutable expression tree.
class Bundle {
public:
    enum class Node { Line, Sum, Ext };

    static BundlePtr line(Divisor rep);
    static BundlePtr direct_sum(std::vector<BundlePtr> parts);
    // sub and quot of rank 1: the class must live over det(sub) - det(quot)
    static BundlePtr ext(H1Class cls, BundlePtr sub, BundlePtr quot);

    Node node() const { return node_; }
    const Divisor& line_rep() const;
    const std::vector<BundlePtr>& summands() const;
    const H1Class& ext_class() const;
    const BundlePtr& sub() const;
    const BundlePtr& quot() const;
    const CurvePtr& curve() const { return curve_; }

    int rank() const;
    long degree() const;
    Divisor determinant() const; // divisor-class representative

    // child by index: summand i, or 0 = sub / 1 = quot for extensions
    BundlePtr child(size_t i) const;
    size_t child_count() const;

private:
    Node node_;
    CurvePtr curve_;
    Divisor rep_;
    std::vector<BundlePtr> parts_;
    std::shared_ptr<H1Class> cls_;
    explicit Bundle(Divisor rep);
    Bundle(CurvePtr curve, std::vector<BundlePtr> parts);
    Bundle(CurvePtr curve, H1Class cls, BundlePtr sub, BundlePtr quot);
};

// true iff the extension class vanishes (Ext nodes only)
bool is_split(const Bundle& e);

enum class Flatness { Flat, NotFlat, Unknown };

const char* flatness_name(Flatness f);

struct TraceStep {
    std::string rule;   // R1..R6
    std::string node;   // path from the root: "" or dotted child indices
    std::string anchor; // criterion behind the rule
    std::map<std::string, std::string> facts;
};

struct FlatnessVerdict {
    Flatness verdict = Flatness::Unknown;
    std::vector<TraceStep> trace;
    std::string unknown_reason;
};

// Rule order:
//  R1 degree != 0                          -> NotFlat
//  R2 line bundle of degree 0              -> Flat
//  R3 direct sum with a NotFlat summand    -> NotFlat
//  R4 direct sum of Flat summands          -> Flat
//  R5 split extension                      -> verdict of sub (+) quot
//  R6 nonsplit rank-2 degree-0 extension
//     with degree(sub) > 0                 -> Flat
// anything else                            -> Unknown
// The procedure is deliberately incomplete; Unknown is a valid outcome.
FlatnessVerdict is_flat(const Bundle& b);

// Re-derive the verdict from the emitted trace, recomputing every cited
// fact from the expression; throws InternalError on any mismatch.
Flatness replay_trace(const Bundle& b, const std::vector<TraceStep>& trace);

} // namespace hecc

#endif
