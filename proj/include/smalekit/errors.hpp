#pragma once

#include <stdexcept>
#include <string>

namespace smalekit {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- expression / germ errors ----

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& msg)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) +
                ": " + msg),
          line(line), column(column) {}
    int line;
    int column;
};

class ArityError : public Error {
public:
    explicit ArityError(const std::string& msg) : Error("arity error: " + msg) {}
};

class DenominatorVanishes : public Error {
public:
    explicit DenominatorVanishes(int component)
        : Error("denominator vanishes in component " + std::to_string(component)),
          component(component) {}
    int component;
};

// ---- degree engine errors ----

class InvalidRequest : public Error {
public:
    explicit InvalidRequest(const std::string& msg) : Error("invalid request: " + msg) {}
};

class NotIsolatedZero : public Error {
public:
    explicit NotIsolatedZero(const std::string& msg) : Error("zero is not isolated: " + msg) {}
};

class NoConvergence : public Error {
public:
    explicit NoConvergence(const std::string& msg) : Error("no convergence: " + msg) {}
};

class NonRegularValueExhausted : public Error {
public:
    explicit NonRegularValueExhausted(const std::string& msg)
        : Error("could not find a regular target value: " + msg) {}
};

class ZeroOnSphere : public Error {
public:
    explicit ZeroOnSphere(const std::string& msg)
        : Error("map vanishes on the sampling sphere: " + msg) {}
};

class NoStabilization : public Error {
public:
    explicit NoStabilization(const std::string& msg)
        : Error("refinement did not stabilize: " + msg) {}
};

class NotHolomorphic : public Error {
public:
    explicit NotHolomorphic(const std::string& msg)
        : Error("germ is not holomorphic: " + msg) {}
};

class EngineDisagreement : public Error {
public:
    explicit EngineDisagreement(const std::string& msg)
        : Error("degree engines disagree: " + msg) {}
};

// ---- rank-2 analysis errors ----

class NotRankTwo : public Error {
public:
    explicit NotRankTwo(const std::string& msg) : Error("not an isolated rank-2 point: " + msg) {}
};

class ShearNotInvertible : public Error {
public:
    explicit ShearNotInvertible(const std::string& msg)
        : Error("shear coordinate change not invertible: " + msg) {}
};

// ---- bundle errors ----

class EpsilonOutOfRange : public Error {
public:
    explicit EpsilonOutOfRange(const std::string& msg) : Error("epsilon out of range: " + msg) {}
};

class NotOnBoundary : public Error {
public:
    explicit NotOnBoundary(const std::string& msg)
        : Error("point is not on the chart boundary: " + msg) {}
};

class NonFiberedMap : public Error {
public:
    explicit NonFiberedMap(const std::string& msg)
        : Error("bundle map is not fibered over the base: " + msg) {}
};

class NonIsolatedLocus : public Error {
public:
    explicit NonIsolatedLocus(const std::string& msg)
        : Error("rank-2 locus is not isolated: " + msg) {}
};

class Unsupported : public Error {
public:
    explicit Unsupported(const std::string& msg) : Error("unsupported: " + msg) {}
};

// ---- integer calculus errors ----

class NotDivisible : public Error {
public:
    explicit NotDivisible(const std::string& msg) : Error("divisibility violated: " + msg) {}
};

class OddH : public Error {
public:
    explicit OddH(const std::string& msg) : Error("defect must be even: " + msg) {}
};

class ParityError : public Error {
public:
    explicit ParityError(const std::string& msg) : Error("parity violated: " + msg) {}
};

} // namespace smalekit
