# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from numbers import Integral, Real


class Tags:
    """
    This class contains all 'Tags' for the use in the settings dictionary as well as strings that are used in QuGAL
    as naming conventions.
    Every Tag that is intended to be used as a key in the settings dictionary is represented by a tuple.
    The first element of the tuple is a string that corresponds to the name of the Tag. It is also the key that is
    used in the flat key=value configuration files and in `--set key=value` command line overrides.
    The second element of the tuple is a data type or a tuple of data types.
    The values that are assigned to the keys in the settings should match these data types.
    Their usage within the QuGAL package is divided in "QuGAL package", "experiment X", "module Y" and
    "naming convention".
    """

    """
    General settings
    """

    EXPERIMENT = ("experiment", str)
    """
    Name of the experiment to run. One of the EXPERIMENT_* naming conventions below.\n
    Usage: QuGAL package
    """

    TARGET_STATE = ("target", str)
    """
    Target state of the experiment: either the name of a preset from the STATE_LIBRARY or the path to a state file.\n
    Usage: QuGAL package
    """

    OUTPUT_PATH = ("out_dir", str)
    """
    Directory where the trace CSV, the summary JSON and the HDF5 archive are written.\n
    Usage: QuGAL package
    """

    RUN_NAME = ("run_name", str)
    """
    Base name of the files written by a run. Defaults to the experiment name.\n
    Usage: QuGAL package
    """

    RANDOM_SEED = ("seed", Integral)
    """
    Seed for all random number generators of a run.\n
    Usage: QuGAL package
    """

    SAVE_HDF5_ARCHIVE = ("save_hdf5", bool)
    """
    If True, the settings and the terminal states of a run are additionally written to an HDF5 archive.\n
    Usage: QuGAL package
    """

    ROUNDS = ("rounds", Integral)
    """
    Number of training rounds T.\n
    Usage: module qmmw, module training
    """

    RECORD_INTERVAL = ("record_interval", Integral)
    """
    Only every n-th round is written to the training trace (the last round is always recorded).\n
    Usage: module qmmw, module training
    """

    FIDELITY_SQUARED = ("fidelity_squared", bool)
    """
    Fidelity convention of the reported trace. True: squared Uhlmann fidelity, False: root fidelity.\n
    Usage: module qmmw, module training
    """

    """
    QMMW settings
    """

    EPSILON = ("epsilon", (Real, str))
    """
    Learning rate of the Gibbs updates, or EPSILON_AUTO.\n
    Usage: module qmmw
    """

    EPSILON_AUTO = "auto"
    """
    Selects epsilon = epsilon_scale * sqrt(N/T).\n
    Usage: naming convention
    """

    EPSILON_SCALE = ("epsilon_scale", Real)
    """
    Prefactor of the automatic learning rate (1 or 2).\n
    Usage: module qmmw
    """

    GENERATOR_SIGN = ("generator_sign", Integral)
    """
    Sign (+1 or -1) inside the exponent of the generator update.\n
    Usage: module qmmw
    """

    DISCRIMINATOR_SIGN = ("discriminator_sign", Integral)
    """
    Sign (+1 or -1) inside the exponent of the discriminator update.\n
    Usage: module qmmw
    """

    AUDIT_REGRET = ("audit_regret", bool)
    """
    If True, the QMMW loop records the regret rates of both players.\n
    Usage: module qmmw
    """

    AUDIT_ROUNDS = ("audit_rounds", str)
    """
    Comma separated list of round counts that the regret-audit experiment sweeps over, e.g. "100,400,1600".\n
    Usage: experiment regret-audit
    """

    """
    QuGAN settings
    """

    INNER_ITERATIONS = ("inner_iterations", Integral)
    """
    Number K of virtual inner iterations of the multiplicative weight training method.\n
    Usage: module training
    """

    LEARNING_RATE = ("learning_rate", Real)
    """
    Gradient step size alpha.\n
    Usage: module training
    """

    WEIGHT_SCALE = ("scale", Real)
    """
    Scale eta of the multiplicative weights; the weights of one round sum to eta.\n
    Usage: module training
    """

    INIT_RANGE_MIN = ("init_min", Real)
    """
    Lower end of the uniform parameter initialisation interval in radians.\n
    Usage: module training
    """

    INIT_RANGE_MAX = ("init_max", Real)
    """
    Upper end of the uniform parameter initialisation interval in radians.\n
    Usage: module training
    """

    GENERATOR_DIRECTION = ("generator_direction", str)
    """
    DIRECTION_ASCEND or DIRECTION_DESCEND for the generator parameters.\n
    Usage: module training
    """

    DISCRIMINATOR_DIRECTION = ("discriminator_direction", str)
    """
    DIRECTION_ASCEND or DIRECTION_DESCEND for the discriminator parameters.\n
    Usage: module training
    """

    DIRECTION_ASCEND = "ascend"
    DIRECTION_DESCEND = "descend"

    GENERATOR_BLOCKS = ("generator_blocks", Integral)
    """
    Number of repeated blocks L1 of the generator circuit.\n
    Usage: module circuits
    """

    DISCRIMINATOR_BLOCKS = ("discriminator_blocks", Integral)
    """
    Number of repeated blocks L2 of the discriminator circuit.\n
    Usage: module circuits
    """

    GENERATOR_ANCILLAS = ("n_ancilla", Integral)
    """
    Number of ancillary generator qubits that are traced out (0 for pure targets).\n
    Usage: module circuits
    """

    GRADIENT_METHOD = ("gradient_method", str)
    """
    GRADIENT_METHOD_PARAMETER_SHIFT or GRADIENT_METHOD_FINITE_DIFFERENCE.\n
    Usage: module circuits, module training
    """

    GRADIENT_METHOD_PARAMETER_SHIFT = "parameter_shift"
    GRADIENT_METHOD_FINITE_DIFFERENCE = "finite_difference"

    TRAINING_METHOD = ("training_method", str)
    """
    TRAINING_METHOD_MULTIPLICATIVE_WEIGHTS or TRAINING_METHOD_BASELINE.\n
    Usage: experiment qugan-enttest
    """

    TRAINING_METHOD_MULTIPLICATIVE_WEIGHTS = "multiplicative_weights"
    TRAINING_METHOD_BASELINE = "baseline"

    AUDIT_INNER_LOOP = ("audit_inner", bool)
    """
    If True, the inner losses and weights of the multiplicative weight training method are recorded.\n
    Usage: module training
    """

    """
    Entanglement test settings
    """

    BIPARTITE_SPLIT = ("split", str)
    """
    Bipartition of the target qubits in the form "n_a|n_b" (e.g. "2|2").\n
    Usage: module qmmw, module training
    """

    DECISION_THRESHOLD = ("threshold", (Real, str))
    """
    Decision threshold of the entanglement tests, THRESHOLD_AUTO or THRESHOLD_THEOREM.\n
    Usage: module qmmw, module training
    """

    THRESHOLD_AUTO = "auto"
    THRESHOLD_THEOREM = "theorem"

    TERMINAL_BAND_FRACTION = ("band_fraction", Real)
    """
    Fraction of the final rounds that defines the terminal loss band of a QuGAN run.\n
    Usage: module training
    """

    DECISION_SEPARABLE = "separable"
    DECISION_ENTANGLED = "entangled"

    """
    Sign resolution settings
    """

    SIGN_RESOLUTION_ALGORITHM = ("algorithm", str)
    """
    ALGORITHM_QMMW or ALGORITHM_QUGAN.\n
    Usage: experiment sign-resolve
    """

    ALGORITHM_QMMW = "qmmw"
    ALGORITHM_QUGAN = "qugan"

    """
    Experiment names
    """

    EXPERIMENT_QMMW_APPROXIMATION = "qmmw-approx"
    EXPERIMENT_QMMW_ENTANGLEMENT_TEST = "qmmw-enttest"
    EXPERIMENT_QUGAN_ENTANGLEMENT_TEST = "qugan-enttest"
    EXPERIMENT_REGRET_AUDIT = "regret-audit"
    EXPERIMENT_SIGN_RESOLUTION = "sign-resolve"

    """
    Output naming conventions
    """

    TRACE_COLUMNS = ("round", "loss", "fidelity", "gen_regret_rate", "disc_regret_rate")
    """
    Fixed column order of every trace CSV.\n
    Usage: naming convention
    """

    SETTINGS = "settings"
    STATES = "states"
    SUMMARY = "summary"

    @classmethod
    def settings_keys(cls) -> dict:
        """
        :return: a dictionary mapping the name of every settings tag to the tag tuple.
        """
        keys = dict()
        for attribute_name in dir(cls):
            if attribute_name.startswith("_"):
                continue
            value = getattr(cls, attribute_name)
            if isinstance(value, tuple) and len(value) == 2 and isinstance(value[0], str) and \
                    isinstance(value[1], (type, tuple)) and not isinstance(value[1], str):
                if isinstance(value[1], tuple) and not all(isinstance(_t, type) for _t in value[1]):
                    continue
                keys[value[0]] = value
        return keys

    @classmethod
    def from_name(cls, name: str) -> tuple:
        """
        Looks up the settings tag with the given name.

        :param name: the name of the tag as it appears in configuration files
        :raises KeyError: if no settings tag with this name exists
        """
        keys = cls.settings_keys()
        if name not in keys:
            raise KeyError(f"Unknown settings key '{name}'. Known keys: {', '.join(sorted(keys))}")
        return keys[name]
