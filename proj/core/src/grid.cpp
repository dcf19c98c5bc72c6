#include "couette3d/grid.hpp"

// Grid types are header-only; this TU anchors the header in the build.
