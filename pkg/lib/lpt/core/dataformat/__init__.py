from lib.lpt.core.dataformat.json import digest


def get_encoder():
    from lib.lpt.core.dataformat.json import Encoder
    return Encoder()


def get_decoder():
    from lib.lpt.core.dataformat.json import Decoder
    return Decoder()
