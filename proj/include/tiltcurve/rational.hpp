#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tilt {

/* Domain error: invalid input or an operation outside a function's domain.
   CLI maps these to exit code 1; malformed input files map to exit code 2. */
struct error : std::runtime_error {
	explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline long long checked_add(long long a, long long b) {
	long long r;
	if (__builtin_add_overflow(a, b, &r)) throw error("integer overflow in addition");
	return r;
}

inline long long checked_sub(long long a, long long b) {
	long long r;
	if (__builtin_sub_overflow(a, b, &r)) throw error("integer overflow in subtraction");
	return r;
}

inline long long checked_mul(long long a, long long b) {
	long long r;
	if (__builtin_mul_overflow(a, b, &r)) throw error("integer overflow in multiplication");
	return r;
}

/* Exact rational on checked 64-bit integers. Denominators here are lcm's of
   weight data, so the range is ample; overflow throws instead of wrapping. */
class Rational {
public:
	Rational() : num_(0), den_(1) {}
	Rational(long long n) : num_(n), den_(1) {}
	Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

	long long num() const { return num_; }
	long long den() const { return den_; }

	Rational operator+(const Rational& o) const {
		return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
		                checked_mul(den_, o.den_));
	}
	Rational operator-(const Rational& o) const {
		return Rational(checked_sub(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
		                checked_mul(den_, o.den_));
	}
	Rational operator*(const Rational& o) const {
		return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
	}
	Rational operator/(const Rational& o) const {
		if (o.num_ == 0) throw error("rational division by zero");
		return Rational(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
	}
	Rational operator-() const { return Rational(-num_, den_); }

	bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
	bool operator!=(const Rational& o) const { return !(*this == o); }
	bool operator<(const Rational& o) const {
		return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
	}
	bool operator>(const Rational& o) const { return o < *this; }
	bool operator<=(const Rational& o) const { return !(o < *this); }
	bool operator>=(const Rational& o) const { return !(*this < o); }

	bool is_integer() const { return den_ == 1; }
	bool is_zero() const { return num_ == 0; }
	int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

	long long as_integer() const {
		if (den_ != 1) throw error("rational " + str() + " is not an integer");
		return num_;
	}

	std::string str() const {
		if (den_ == 1) return std::to_string(num_);
		return std::to_string(num_) + "/" + std::to_string(den_);
	}

	/* Parses "a" or "a/b". */
	static Rational parse(const std::string& s) {
		auto slash = s.find('/');
		try {
			if (slash == std::string::npos) return Rational(std::stoll(s));
			long long n = std::stoll(s.substr(0, slash));
			long long d = std::stoll(s.substr(slash + 1));
			return Rational(n, d);
		} catch (const std::logic_error&) {
			throw error("cannot parse rational: '" + s + "'");
		}
	}

private:
	void normalize() {
		if (den_ == 0) throw error("rational with zero denominator");
		if (den_ < 0) { num_ = -num_; den_ = -den_; }
		long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
		if (g > 1) { num_ /= g; den_ /= g; }
		if (num_ == 0) den_ = 1;
	}

	long long num_, den_;
};

/* Nonnegative remainder of a mod m, m > 0. */
inline int mod_norm(long long a, int m) {
	long long r = a % m;
	if (r < 0) r += m;
	return static_cast<int>(r);
}

}  // namespace tilt
