// Walks the flux parameter a through one unit and prints the lowest levels
// of the m = 0 and m = 1 channels. At a = 1 the m = 1 channel has taken the
// place of m = 0: the spectrum is periodic in the flux, individual levels are not.
#include "hmw/analytic.hpp"
#include "hmw/radial_oracle.hpp"

#include <cstdio>

int main()
{
    for(double a = 0.0; a <= 1.0 + 1e-9; a += 0.25)
    {
        const hmw::PhysicalParams p = hmw::presets::natural(2.0, 3.0, a);
        std::printf("a = %.2f\n", a);
        for(int m = 0; m <= 1; ++m)
        {
            const auto levels = hmw::solve_levels(m, p, 2);
            for(int n = 0; n < 2; ++n)
            {
                std::printf("  n=%d m=%d  closed %.10f  numeric %.10f\n", n, m, hmw::energy_full_exact({n, m}, p),
                            levels.eigenvalues[static_cast<std::size_t>(n)]);
            }
        }
    }
}
