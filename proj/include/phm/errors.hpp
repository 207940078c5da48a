#pragma once

#include <stdexcept>
#include <string>

namespace phm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input is not a square matrix with finite entries.
class InvalidMatrix : public Error {
public:
    using Error::Error;
};

/// Eigenvector matrix is singular or its condition estimate exceeds the ceiling.
class NotDiagonalizable : public Error {
public:
    using Error::Error;
};

/// Some eigenvalue cluster has no conjugate partner of equal multiplicity.
class SpectrumNotPaired : public Error {
public:
    using Error::Error;
};

class SpectrumNotReal : public Error {
public:
    using Error::Error;
};

class SingularEta : public Error {
public:
    using Error::Error;
};

/// Antilinear map A = SK fails SS* = 1 within tolerance.
class NotInvolutory : public Error {
public:
    using Error::Error;
};

class NotCommuting : public Error {
public:
    using Error::Error;
};

/// No invertible U with S U* = U was found within the retry cap.
class FactorizationFailed : public Error {
public:
    using Error::Error;
};

class DegenerateParams : public Error {
public:
    using Error::Error;
};

class InvalidGrid : public Error {
public:
    using Error::Error;
};

/// e^{|theta| k_max} would leave the representable range.
class ShiftOverflow : public Error {
public:
    using Error::Error;
};

} // namespace phm
