#pragma once

#include "hybridcomb/bands.hpp"
#include "hybridcomb/dos.hpp"
#include "hybridcomb/error.hpp"
#include "hybridcomb/limits.hpp"
#include "hybridcomb/params.hpp"
#include "hybridcomb/scattering.hpp"
#include "hybridcomb/secular.hpp"
#include "hybridcomb/transfer.hpp"
#include "hybridcomb/units.hpp"
