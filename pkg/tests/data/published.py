"""Published reference values, kept as strings so the printed precision is known."""

PROBE_X = (-0.035, -0.025, -0.015, -0.005, 0.005, 0.015, 0.025, 0.035)

# weight tables: family key -> rows k = 0, 1, 2 at PROBE_X
WEIGHTS = {
    'js': (
        ('0.099892', '0.099892', '0.142639', '0.999996', '3.103e-8', '5.804e-8', '0.099894', '0.099894'),
        ('0.600426', '0.600426', '0.857361', '3.448e-6', '1.151e-6', '0.667063', '0.600428', '0.600428'),
        ('0.299682', '0.299681', '2.226e-7', '2.788e-7', '0.999999', '0.332937', '0.299678', '0.299678'),
    ),
    'm': (
        ('0.100000', '0.100000', '0.127205', '0.999990', '3.413e-7', '7.082e-7', '0.100000', '0.100000'),
        ('0.600000', '0.600000', '0.872794', '9.195e-6', '3.070e-6', '0.667040', '0.600000', '0.600000'),
        ('0.300000', '0.300000', '1.220e-6', '1.208e-6', '0.999997', '0.332959', '0.300000', '0.300000'),
    ),
    'z': (
        ('0.100000', '0.100000', '0.142660', '0.991870', '2.027e-4', '1.604e-4', '0.100000', '0.100000'),
        ('0.600000', '0.600000', '0.856724', '6.318e-3', '2.120e-3', '0.666758', '0.600000', '0.600000'),
        ('0.300000', '0.300000', '6.166e-4', '1.812e-3', '0.997677', '0.333082', '0.300000', '0.300000'),
    ),
    'zr1': (
        ('0.100000', '0.100000', '0.142660', '0.991870', '2.027e-4', '1.604e-4', '0.100000', '0.100000'),
        ('0.600000', '0.600000', '0.856724', '6.318e-3', '2.120e-3', '0.666758', '0.600000', '0.600000'),
        ('0.300000', '0.300000', '6.166e-4', '1.812e-3', '0.997677', '0.333082', '0.300000', '0.300000'),
    ),
    'zr3': (
        ('0.100000', '0.100000', '0.142646', '0.991246', '2.262e-4', '1.864e-4', '0.100000', '0.100000'),
        ('0.600000', '0.600000', '0.856638', '6.734e-3', '2.261e-3', '0.666741', '0.600000', '0.600000'),
        ('0.300000', '0.300000', '7.164e-4', '2.021e-3', '0.997513', '0.333073', '0.300000', '0.300000'),
    ),
    'zr6': (
        ('0.100000', '0.100000', '0.142335', '0.978451', '7.119e-4', '7.543e-4', '0.100000', '0.100000'),
        ('0.600000', '0.600000', '0.854772', '1.525e-2', '5.171e-3', '0.666361', '0.600000', '0.600000'),
        ('0.300000', '0.300000', '2.892e-3', '6.299e-3', '0.994117', '0.332885', '0.300000', '0.300000'),
    ),
}

# advection convergence: (norm, family) -> [(N, error, order or None)]
CONVERGENCE = {
    ('L1', 'js'): [
        (10, '2.81e-2', None),
        (20, '1.44e-3', '4.2923'),
        (40, '4.39e-5', '5.0301'),
        (80, '1.38e-6', '4.9897'),
        (160, '4.34e-8', '4.9938'),
        (320, '1.36e-9', '4.9975'),
    ],
    ('L1', 'm'): [
        (10, '8.57e-3', None),
        (20, '2.06e-4', '5.3785'),
        (40, '6.32e-6', '5.0252'),
        (80, '2.00e-7', '4.9832'),
        (160, '6.29e-9', '4.9911'),
        (320, '1.98e-10', '4.9892'),
    ],
    ('L1', 'z'): [
        (10, '7.40e-3', None),
        (20, '2.09e-4', '5.1461'),
        (40, '6.33e-6', '5.0461'),
        (80, '2.00e-7', '4.9841'),
        (160, '6.29e-9', '4.9912'),
        (320, '1.98e-10', '4.9892'),
    ],
    ('L1', 'zr'): [
        (10, '5.94e-3', None),
        (20, '1.97e-4', '4.9135'),
        (40, '6.31e-6', '4.9646'),
        (80, '2.00e-7', '4.9799'),
        (160, '6.29e-9', '4.9909'),
        (320, '1.98e-10', '4.9892'),
    ],
    ('L2', 'js'): [
        (10, '3.05e-2', None),
        (20, '1.64e-3', '4.2147'),
        (40, '5.19e-5', '4.9851'),
        (80, '1.59e-6', '5.0263'),
        (160, '4.91e-8', '5.0195'),
        (320, '1.53e-9', '5.0065'),
    ],
    ('L2', 'm'): [
        (10, '9.19e-3', None),
        (20, '2.29e-4', '5.3257'),
        (40, '7.09e-6', '5.0144'),
        (80, '2.23e-7', '4.9886'),
        (160, '7.00e-9', '4.9946'),
        (320, '2.20e-10', '4.9912'),
    ],
    ('L2', 'z'): [
        (10, '8.12e-3', None),
        (20, '2.41e-4', '5.0710'),
        (40, '7.21e-6', '5.0663'),
        (80, '2.24e-7', '5.0087'),
        (160, '7.01e-9', '4.9979'),
        (320, '2.20e-10', '4.9916'),
    ],
    ('L2', 'zr'): [
        (10, '6.60e-3', None),
        (20, '2.21e-4', '4.8986'),
        (40, '7.07e-6', '4.9677'),
        (80, '2.23e-7', '4.9856'),
        (160, '7.00e-9', '4.9944'),
        (320, '2.20e-10', '4.9912'),
    ],
    ('Linf', 'js'): [
        (10, '4.73e-2', None),
        (20, '2.58e-3', '4.1952'),
        (40, '9.00e-5', '4.8409'),
        (80, '2.79e-6', '5.0116'),
        (160, '8.64e-8', '5.0136'),
        (320, '2.56e-9', '5.0753'),
    ],
    ('Linf', 'm'): [
        (10, '1.25e-2', None),
        (20, '3.20e-4', '5.2867'),
        (40, '1.01e-5', '4.9815'),
        (80, '3.18e-7', '4.9933'),
        (160, '9.93e-9', '4.9984'),
        (320, '3.12e-10', '4.9936'),
    ],
    ('Linf', 'z'): [
        (10, '1.12e-2', None),
        (20, '3.47e-4', '5.0151'),
        (40, '1.03e-5', '5.0688'),
        (80, '3.19e-7', '5.0187'),
        (160, '9.95e-9', '5.0036'),
        (320, '3.12e-10', '4.9950'),
    ],
    ('Linf', 'zr'): [
        (10, '9.71e-3', None),
        (20, '3.18e-4', '4.9335'),
        (40, '1.01e-5', '4.9743'),
        (80, '3.18e-7', '4.9926'),
        (160, '9.93e-9', '4.9983'),
        (320, '3.12e-10', '4.9935'),
    ],
}
