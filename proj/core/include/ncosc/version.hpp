#pragma once

#define NCOSC_VERSION "1.0.0"
