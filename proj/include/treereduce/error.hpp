#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treereduce {

class Error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

/// Malformed Timbuk or tree text. Line and column are 1-based.
class ParseError : public Error
{
public:
	ParseError(const std::string& msg, std::size_t line, std::size_t column)
		: Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
		  line_(line), column_(column)
	{ }

	std::size_t line() const { return line_; }
	std::size_t column() const { return column_; }

private:
	std::size_t line_;
	std::size_t column_;
};

/// An automaton, tree or relation violates a structural invariant.
class ValidationError : public Error
{
public:
	using Error::Error;
};

/// An operation was called outside its contract (wrong dimension, non-preorder, ...).
class PreconditionError : public Error
{
public:
	using Error::Error;
};

/// An exact oracle refused an instance that exceeds its configured size guard.
class GuardError : public Error
{
public:
	using Error::Error;
};

/// The pruning/quotienting catalog rejects a relation combination.
class CatalogError : public Error
{
public:
	using Error::Error;
};

} // namespace treereduce
