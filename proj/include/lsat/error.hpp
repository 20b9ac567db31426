#pragma once

#include <stdexcept>
#include <string>

namespace lsat {

// Base class for every error raised by the engine. The CLI maps these onto
// exit status 3 (input errors); certification outcomes are never exceptions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroZero : public Error {
public:
    ZeroZero() : Error("(0, 0) does not define a slope") {}
};

class NotDistinct : public Error {
public:
    NotDistinct() : Error("circular order needs three pairwise distinct slopes") {}
};

class NotCoprime : public Error {
public:
    explicit NotCoprime(const std::string& what) : Error("not coprime: " + what) {}
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class InvalidKnotFacts : public Error {
public:
    using Error::Error;
};

class InvalidPattern : public Error {
public:
    using Error::Error;
};

class UnknotCompanion : public Error {
public:
    UnknotCompanion() : Error("the companion knot must be nontrivial") {}
};

class NotPositive : public Error {
public:
    NotPositive() : Error("braid word is not positive") {}
};

class NotAKnot : public Error {
public:
    NotAKnot() : Error("braid closure has more than one component") {}
};

class BridgeOutOfRange : public Error {
public:
    using Error::Error;
};

/// Raised when a twist family cannot answer P(U, n). Carries n in decimal.
class UnknownTwist : public Error {
public:
    explicit UnknownTwist(std::string n)
        : Error("twist family cannot answer P(U, " + n + ")"), n_(std::move(n)) {}
    const std::string& twist() const noexcept { return n_; }

private:
    std::string n_;
};

class NoThreshold : public Error {
public:
    NoThreshold() : Error("pattern carries no negative L-space tail assertion") {}
};

class NotCertified : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace lsat
