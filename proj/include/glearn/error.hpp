#pragma once

#include <stdexcept>
#include <string>

namespace glearn {

// Base class for every failure raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class EstimationError : public Error {
 public:
  using Error::Error;
};

// Factorization or inversion failure.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, int step) : Error(what), step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual) : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class DegenerateTransitionError : public Error {
 public:
  using Error::Error;
};

class GradientError : public Error {
 public:
  GradientError(const std::string& what, int coordinate) : Error(what), coordinate_(coordinate) {}
  int coordinate() const { return coordinate_; }

 private:
  int coordinate_;
};

class UndefinedSharpeError : public Error {
 public:
  using Error::Error;
};

class MissingInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace glearn
