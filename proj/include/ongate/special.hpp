#pragma once

namespace ongate {

// Physicists' Hermite polynomial H_n(x) by the upward recurrence
// H_{n+1} = 2 x H_n - 2 n H_{n-1}; stable for the orders used here.
double hermite(int n, double x);

// Airy function Ai(t): Maclaurin series on [-8, 6.5], standard asymptotic
// expansions beyond. Absolute accuracy better than 1e-10 on [-10, 10].
double airy_ai(double t);

}  // namespace ongate
