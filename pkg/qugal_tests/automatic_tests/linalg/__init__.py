# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT
